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

// g7hecke: check | sweep | identities | relations
//
// Exit codes: 0 success/agreement, 1 input error, 2 mathematical
// disagreement or identity failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "g7hecke/errors.hpp"
#include "g7hecke/identities.hpp"
#include "g7hecke/irreducibility.hpp"
#include "g7hecke/json_io.hpp"
#include "g7hecke/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitMath = 2;

struct GlobalOptions {
    double tolerance = g7hecke::kVerdictTolerance;
    std::string r_sign = "+1";
    std::string force_regime = "auto";
    std::string output = "json";
};

g7hecke::RootSign parse_sign(const std::string& s) {
    if (s == "+1" || s == "1") return g7hecke::RootSign::plus;
    if (s == "-1") return g7hecke::RootSign::minus;
    throw g7hecke::ParseError("--r-sign must be +1 or -1");
}

g7hecke::ForceRegime parse_force(const std::string& s) {
    if (s == "auto") return g7hecke::ForceRegime::automatic;
    if (s == "equal") return g7hecke::ForceRegime::equal;
    if (s == "distinct") return g7hecke::ForceRegime::distinct;
    throw g7hecke::ParseError("--force-regime must be equal, distinct or auto");
}

void emit(const g7hecke::Json& j, const std::string& text, const GlobalOptions& g) {
    if (g.output == "text") {
        std::cout << text;
    } else {
        std::cout << j.dump(2) << '\n';
    }
}

int run_check(const std::string& path, const GlobalOptions& g) {
    const g7hecke::Params p = g7hecke::load_params(path);
    const g7hecke::DecisionOptions opts{g.tolerance, parse_sign(g.r_sign), parse_force(g.force_regime)};
    const g7hecke::Verdict v = g7hecke::decide(p, opts);
    emit(g7hecke::verdict_to_json(p, v, g.tolerance), g7hecke::verdict_to_text(p, v), g);
    return v.agreement ? kExitOk : kExitMath;
}

int run_relations(const std::string& path, const GlobalOptions& g) {
    const g7hecke::Params p = g7hecke::load_params(path);
    const g7hecke::Regime regime = g7hecke::resolve_regime(p, parse_force(g.force_regime), g.tolerance);
    const g7hecke::GeneratorTriple t = g7hecke::build_for_regime(p, regime, parse_sign(g.r_sign));
    emit(g7hecke::relations_to_json(p, t), g7hecke::relations_to_text(t, p), g);
    const double worst = std::max(g7hecke::braid_residual(t), g7hecke::hecke_residuals(t, p).max());
    return worst < g7hecke::kVerdictTolerance ? kExitOk : kExitMath;
}

int run_identities(const std::optional<std::string>& only, const GlobalOptions& g) {
    std::vector<g7hecke::IdentityReport> reports;
    try {
        reports = g7hecke::run_identity_suite(only ? std::optional<std::string_view>(*only) : std::nullopt);
    } catch (const std::invalid_argument& e) {
        throw g7hecke::ParseError(e.what());
    }
    emit(g7hecke::identities_to_json(reports), g7hecke::identities_to_text(reports), g);
    const bool failed = std::any_of(reports.begin(), reports.end(), [](const g7hecke::IdentityReport& r) {
        return r.status == g7hecke::IdentityStatus::failed;
    });
    return failed ? kExitMath : kExitOk;
}

int run_sweep(g7hecke::SweepConfig cfg, const std::string& domain, const std::string& regime,
              const std::string& fixtures, const GlobalOptions& g) {
    const auto d = g7hecke::parse_domain(domain);
    if (!d) throw g7hecke::ParseError("--domain must be positive-real, unit-modulus or general-complex");
    const auto r = g7hecke::parse_regime_filter(regime);
    if (!r) throw g7hecke::ParseError("--regime must be both, equal or distinct");
    cfg.domain = *d;
    cfg.regime = *r;
    cfg.tolerance = g.tolerance;
    cfg.r_sign = parse_sign(g.r_sign);
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw g7hecke::ParseError(e.what());
    }

    const g7hecke::SweepSummary s = g7hecke::run_sweep(cfg);
    if (!fixtures.empty()) {
        std::ofstream out(fixtures);
        if (!out) throw g7hecke::ParseError("cannot write fixture file '" + fixtures + "'");
        out << g7hecke::fixtures_to_json(s).dump(2) << '\n';
    }
    emit(g7hecke::sweep_to_json(s), g7hecke::sweep_to_text(s), g);
    return s.disagree_unresolved > 0 ? kExitMath : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Irreducibility checks for the two-dimensional representation of the Hecke algebra of G7"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--tolerance", g.tolerance, "Relative tolerance for verdicts")->check(CLI::PositiveNumber);
    app.add_option("--r-sign", g.r_sign, "Sign of the square root r: +1 or -1");
    app.add_option("--force-regime", g.force_regime, "equal, distinct or auto")
        ->check(CLI::IsMember({"equal", "distinct", "auto"}));
    app.add_option("--output", g.output, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::string param_path;
    auto* check = app.add_subcommand("check", "Decide irreducibility for one parameter file");
    check->add_option("params", param_path, "Parameter file (JSON)")->required();

    std::string relations_path;
    auto* relations = app.add_subcommand("relations", "Braid and Hecke relation residuals for one parameter file");
    relations->add_option("params", relations_path, "Parameter file (JSON)")->required();

    std::optional<std::string> only;
    auto* identities = app.add_subcommand("identities", "Run the exact symbolic identity suite");
    identities->add_option("--only", only, "Run a single report by name");

    g7hecke::SweepConfig cfg;
    std::string domain = "positive-real";
    std::string regime = "both";
    std::string fixtures;
    auto* sweep = app.add_subcommand("sweep", "Randomized comparison of criteria and oracle");
    sweep->add_option("--samples", cfg.samples, "Number of samples")->check(CLI::PositiveNumber);
    sweep->add_option("--seed", cfg.seed, "64-bit seed");
    sweep->add_option("--domain", domain, "positive-real, unit-modulus or general-complex");
    sweep->add_option("--inject-reducible-rate", cfg.inject_rate, "Fraction of constructed reducible samples")
        ->check(CLI::Range(0.0, 1.0));
    sweep->add_option("--log10-min", cfg.log10_min, "Lower bound of log10 moduli");
    sweep->add_option("--log10-max", cfg.log10_max, "Upper bound of log10 moduli");
    sweep->add_option("--regime", regime, "both, equal or distinct");
    sweep->add_option("--threads", cfg.threads, "Worker threads (0 = hardware concurrency)");
    sweep->add_option("--fixtures", fixtures, "Write disagreeing samples to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*check) return run_check(param_path, g);
        if (*relations) return run_relations(relations_path, g);
        if (*identities) return run_identities(only, g);
        if (*sweep) return run_sweep(cfg, domain, regime, fixtures, g);
    } catch (const g7hecke::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const g7hecke::InvalidParams& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const g7hecke::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMath;
    }
    return kExitInput;
}
