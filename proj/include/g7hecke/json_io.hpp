// Copyright 2026 The g7hecke Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON documents read and written by the CLI and the Python module.
// Complex numbers are objects, {"re": a, "im": b} on output; input also
// accepts {"modulus": m, "argument": t} with t in (-pi, pi]. Every output
// document carries "schema_version" and "kind". See docs/schema.md.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "g7hecke/identities.hpp"
#include "g7hecke/irreducibility.hpp"
#include "g7hecke/sweep.hpp"

namespace g7hecke {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(Complex z);
Json to_json(const Vec2& v);
Json to_json(const Mat2& m);
Json to_json(const Params& p);

/// Throws ParseError naming `field` on a malformed value.
Complex complex_from_json(const Json& j, std::string_view field);

/// Throws ParseError naming the offending field, InvalidParams on zero values.
Params params_from_json(const Json& j);
/// Parse errors report line and column.
Params params_from_text(std::string_view text);
Params load_params(const std::filesystem::path& path);

Json verdict_to_json(const Params& p, const Verdict& v, double tolerance);
Json relations_to_json(const Params& p, const GeneratorTriple& g);
Json report_to_json(const IdentityReport& r);
Json identities_to_json(const std::vector<IdentityReport>& reports);
Json outcome_to_json(const SampleOutcome& o);
Json sweep_to_json(const SweepSummary& s);
/// Disagreeing samples with everything needed to reproduce them.
Json fixtures_to_json(const SweepSummary& s);

std::string verdict_to_text(const Params& p, const Verdict& v);
std::string relations_to_text(const GeneratorTriple& g, const Params& p);
std::string identities_to_text(const std::vector<IdentityReport>& reports);
std::string sweep_to_text(const SweepSummary& s);

}  // namespace g7hecke
