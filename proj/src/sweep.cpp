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

#include "g7hecke/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace g7hecke {

namespace {

// splitmix64 finalizer; decorrelates per-sample seeds.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::uint64_t index) : engine_(mix(mix(seed) ^ index)) {}

    double uniform01() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }

    Complex value(const SweepConfig& cfg) {
        double modulus = 1.0;
        double argument = 0.0;
        if (cfg.domain != Domain::unit_modulus) {
            modulus = std::pow(10.0, cfg.log10_min + (cfg.log10_max - cfg.log10_min) * uniform01());
        }
        if (cfg.domain != Domain::positive_real) {
            // pi - 2*pi*u with u in [0, 1) lies in (-pi, pi].
            argument = std::numbers::pi - 2.0 * std::numbers::pi * uniform01();
        }
        return std::polar(modulus, argument);
    }

private:
    std::mt19937_64 engine_;
};

bool injects(std::uint64_t position, double rate) {
    return std::floor(static_cast<double>(position + 1) * rate) > std::floor(static_cast<double>(position) * rate);
}

}  // namespace

std::string_view to_string(Domain d) {
    switch (d) {
        case Domain::positive_real: return "positive-real";
        case Domain::unit_modulus: return "unit-modulus";
        case Domain::general_complex: return "general-complex";
    }
    return "unknown";
}

std::string_view to_string(RegimeFilter f) {
    switch (f) {
        case RegimeFilter::both: return "both";
        case RegimeFilter::equal: return "equal";
        case RegimeFilter::distinct: return "distinct";
    }
    return "unknown";
}

std::optional<Domain> parse_domain(std::string_view s) {
    for (Domain d : {Domain::positive_real, Domain::unit_modulus, Domain::general_complex}) {
        if (to_string(d) == s) return d;
    }
    return std::nullopt;
}

std::optional<RegimeFilter> parse_regime_filter(std::string_view s) {
    for (RegimeFilter f : {RegimeFilter::both, RegimeFilter::equal, RegimeFilter::distinct}) {
        if (to_string(f) == s) return f;
    }
    return std::nullopt;
}

void SweepConfig::validate() const {
    if (samples < 1) throw std::invalid_argument("sample count must be at least 1");
    if (!(log10_min <= log10_max)) throw std::invalid_argument("log10 band must satisfy min <= max");
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (!(inject_rate >= 0.0 && inject_rate <= 1.0)) throw std::invalid_argument("inject rate must lie in [0, 1]");
}

SamplePlan plan_sample(const SweepConfig& cfg, std::uint64_t index) {
    SamplePlan plan;
    std::uint64_t position = index;
    switch (cfg.regime) {
        case RegimeFilter::both:
            plan.regime = index % 2 == 0 ? Regime::distinct_x : Regime::equal_x;
            position = index / 2;
            break;
        case RegimeFilter::equal: plan.regime = Regime::equal_x; break;
        case RegimeFilter::distinct: plan.regime = Regime::distinct_x; break;
    }
    if (injects(position, cfg.inject_rate)) {
        // Placeholder; generate_sample picks the concrete condition from the sample's stream.
        plan.injected = plan.regime == Regime::equal_x ? ReducibleCase::equal_1 : ReducibleCase::distinct_i;
    }
    return plan;
}

Params make_reducible(Params p, ReducibleCase which) {
    switch (which) {
        case ReducibleCase::equal_1: p.z1 = p.y1 * p.z2 / p.y2; break;
        case ReducibleCase::equal_2: p.z1 = p.y2 * p.z2 / p.y1; break;
        case ReducibleCase::distinct_i: p.x1 = p.x2 * p.y1 * p.z1 / (p.y2 * p.z2); break;
        case ReducibleCase::distinct_ii: p.x1 = p.x2 * p.y2 * p.z1 / (p.y1 * p.z2); break;
        case ReducibleCase::distinct_iii: p.x1 = p.x2 * p.y1 * p.z2 / (p.y2 * p.z1); break;
        case ReducibleCase::distinct_iv: p.x1 = p.x2 * p.y2 * p.z2 / (p.y1 * p.z1); break;
    }
    return p;
}

Params generate_sample(const SweepConfig& cfg, std::uint64_t index, SamplePlan& plan) {
    plan = plan_sample(cfg, index);
    SampleRng rng(cfg.seed, index);
    Params p;
    p.x1 = rng.value(cfg);
    p.x2 = rng.value(cfg);
    p.y1 = rng.value(cfg);
    p.y2 = rng.value(cfg);
    p.z1 = rng.value(cfg);
    p.z2 = rng.value(cfg);
    if (plan.regime == Regime::equal_x) p.x1 = p.x2;
    if (plan.injected) {
        static constexpr std::array kEqual{ReducibleCase::equal_1, ReducibleCase::equal_2};
        static constexpr std::array kDistinct{ReducibleCase::distinct_i, ReducibleCase::distinct_ii,
                                              ReducibleCase::distinct_iii, ReducibleCase::distinct_iv};
        plan.injected = plan.regime == Regime::equal_x ? kEqual[rng.pick(kEqual.size())]
                                                       : kDistinct[rng.pick(kDistinct.size())];
        p = make_reducible(p, *plan.injected);
    }
    return p;
}

SampleOutcome evaluate_sample(const SweepConfig& cfg, std::uint64_t index) {
    SamplePlan plan;
    SampleOutcome out;
    out.index = index;
    out.params = generate_sample(cfg, index, plan);
    out.injected = plan.injected;

    const ForceRegime force = plan.regime == Regime::equal_x ? ForceRegime::equal : ForceRegime::distinct;
    const Verdict v = decide(out.params, {cfg.tolerance, cfg.r_sign, force});
    out.regime = v.regime;
    out.theorem = v.theorem_decision;
    out.oracle = v.oracle_decision;
    out.agreement = v.agreement;
    out.resolved_by_branch = v.branch_diagnosis && v.branch_diagnosis->resolved;
    out.braid_residual = v.braid_residual;
    out.hecke_residual = v.hecke.max();

    if (out.injected) {
        // The witness comes from whichever root makes the generators reducible.
        std::optional<RootSign> sign;
        std::vector<Vec2> directions;
        if (v.oracle_decision == Decision::reducible) {
            sign = v.r_sign;
            directions = v.invariant_directions;
        } else if (v.branch_diagnosis && v.branch_diagnosis->flipped_oracle_decision == Decision::reducible) {
            sign = v.branch_diagnosis->flipped_sign;
            directions = v.branch_diagnosis->flipped_directions;
        }
        out.witness_checked = true;
        if (sign) {
            const GeneratorTriple g = build_for_regime(out.params, v.regime, *sign);
            const Vec2& wv = directions.front();
            out.witness_ok = maps_parallel(g.s1, wv, kVerdictTolerance) && maps_parallel(g.s2, wv, kVerdictTolerance) &&
                             maps_parallel(g.s3, wv, kVerdictTolerance);
            if (*out.injected == ReducibleCase::equal_1) {
                const Vec2 u = Vec2{-1.0 / (out.params.x2 * out.params.y2), 1.0}.normalized();
                out.equal_case1_direction_ok = std::any_of(directions.begin(), directions.end(), [&](const Vec2& d) {
                    return std::abs(d.v1 - u.v1) <= kVerdictTolerance && std::abs(d.v2 - u.v2) <= kVerdictTolerance;
                });
            }
        }
    }
    return out;
}

SweepSummary run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    std::vector<SampleOutcome> outcomes(cfg.samples);

    unsigned workers = cfg.threads != 0 ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, cfg.samples));
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t i = w; i < cfg.samples; i += workers) outcomes[i] = evaluate_sample(cfg, i);
            });
        }
    }

    SweepSummary s;
    s.config = cfg;
    for (const SampleOutcome& o : outcomes) {
        if (o.agreement) {
            ++(o.oracle == Decision::reducible ? s.agree_reducible : s.agree_irreducible);
        } else {
            ++(o.resolved_by_branch ? s.disagree_resolved_by_branch : s.disagree_unresolved);
            s.disagreements.push_back(o);
        }
        if (o.injected) ++(o.regime == Regime::equal_x ? s.injected_equal : s.injected_distinct);
        if (o.witness_checked) {
            ++s.witness_checks;
            if (!o.witness_ok) ++s.witness_failures;
        }
        if (o.equal_case1_direction_ok) {
            ++s.equal_case1_checks;
            if (!*o.equal_case1_direction_ok) ++s.equal_case1_mismatches;
        }
        s.max_braid_residual = std::max(s.max_braid_residual, o.braid_residual);
        s.max_hecke_residual = std::max(s.max_hecke_residual, o.hecke_residual);
    }
    return s;
}

}  // namespace g7hecke
