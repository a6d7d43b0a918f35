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

// Randomized comparison of the closed-form criteria against the oracle.
//
// Continuous sampling hits a reducible point with probability zero, so a
// configured fraction of samples is replaced by constructed reducible tuples:
// five values are drawn and the sixth is solved from one of the equalities.
// Sample i is generated from its own generator seeded by (seed, i), so the
// stream does not depend on the number of worker threads.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "g7hecke/irreducibility.hpp"

namespace g7hecke {

enum class Domain { positive_real, unit_modulus, general_complex };
enum class RegimeFilter { both, equal, distinct };

std::string_view to_string(Domain d);
std::string_view to_string(RegimeFilter f);
std::optional<Domain> parse_domain(std::string_view s);
std::optional<RegimeFilter> parse_regime_filter(std::string_view s);

struct SweepConfig {
    std::uint64_t samples = 10'000;
    std::uint64_t seed = 42;
    Domain domain = Domain::positive_real;
    /// Moduli are 10^u with u uniform in [log10_min, log10_max].
    double log10_min = -1.0;
    double log10_max = 1.0;
    double tolerance = kVerdictTolerance;
    /// Fraction of each regime's samples replaced by constructed reducible tuples.
    double inject_rate = 0.1;
    RegimeFilter regime = RegimeFilter::both;
    RootSign r_sign = RootSign::plus;
    /// 0 selects the hardware concurrency.
    unsigned threads = 0;

    /// Throws std::invalid_argument on an unusable configuration.
    void validate() const;
};

struct SamplePlan {
    Regime regime = Regime::distinct_x;
    std::optional<ReducibleCase> injected;
};

/// Regime and injection schedule of sample `index`. With both regimes the
/// samples alternate, and injections are spread evenly within each regime.
SamplePlan plan_sample(const SweepConfig& cfg, std::uint64_t index);

/// Parameters of sample `index`, reproducible from (seed, index) alone.
/// `plan` receives the schedule with the concrete injected condition.
Params generate_sample(const SweepConfig& cfg, std::uint64_t index, SamplePlan& plan);

/// Solves one parameter so that `which` holds, keeping the other five.
Params make_reducible(Params p, ReducibleCase which);

struct SampleOutcome {
    std::uint64_t index = 0;
    Params params;
    Regime regime = Regime::distinct_x;
    std::optional<ReducibleCase> injected;
    Decision theorem = Decision::irreducible;
    Decision oracle = Decision::irreducible;
    bool agreement = false;
    bool resolved_by_branch = false;
    /// Witness checks, run for injected tuples.
    bool witness_checked = false;
    bool witness_ok = false;
    std::optional<bool> equal_case1_direction_ok;
    double braid_residual = 0.0;
    double hecke_residual = 0.0;
};

SampleOutcome evaluate_sample(const SweepConfig& cfg, std::uint64_t index);

struct SweepSummary {
    SweepConfig config;
    std::uint64_t agree_irreducible = 0;
    std::uint64_t agree_reducible = 0;
    std::uint64_t disagree_resolved_by_branch = 0;
    std::uint64_t disagree_unresolved = 0;
    std::uint64_t injected_equal = 0;
    std::uint64_t injected_distinct = 0;
    std::uint64_t witness_checks = 0;
    std::uint64_t witness_failures = 0;
    std::uint64_t equal_case1_checks = 0;
    std::uint64_t equal_case1_mismatches = 0;
    double max_braid_residual = 0.0;
    double max_hecke_residual = 0.0;
    /// Every disagreement (resolved or not), sorted by sample index.
    std::vector<SampleOutcome> disagreements;

    [[nodiscard]] bool passed() const {
        return disagree_unresolved == 0 && witness_failures == 0 && equal_case1_mismatches == 0;
    }
};

SweepSummary run_sweep(const SweepConfig& cfg);

}  // namespace g7hecke
