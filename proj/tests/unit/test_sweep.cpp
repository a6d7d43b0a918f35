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

#include <doctest.h>

#include "g7hecke/json_io.hpp"
#include "g7hecke/sweep.hpp"

using namespace g7hecke;

TEST_CASE("plan_sample alternates regimes and spreads injections") {
    SweepConfig cfg;
    std::uint64_t equal = 0, distinct = 0, inj_equal = 0, inj_distinct = 0;
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        const SamplePlan plan = plan_sample(cfg, i);
        CHECK(plan.regime == (i % 2 == 0 ? Regime::distinct_x : Regime::equal_x));
        (plan.regime == Regime::equal_x ? equal : distinct)++;
        if (plan.injected) {
            CHECK(regime_of(*plan.injected) == plan.regime);
            (plan.regime == Regime::equal_x ? inj_equal : inj_distinct)++;
        }
    }
    CHECK(equal == 5000);
    CHECK(distinct == 5000);
    CHECK(inj_equal == 500);
    CHECK(inj_distinct == 500);
}

TEST_CASE("regime filter") {
    SweepConfig cfg;
    cfg.regime = RegimeFilter::equal;
    for (std::uint64_t i = 0; i < 20; ++i) CHECK(plan_sample(cfg, i).regime == Regime::equal_x);
}

TEST_CASE("samples depend only on seed and index") {
    SweepConfig cfg;
    cfg.domain = Domain::general_complex;
    SamplePlan a, b;
    const Params p = generate_sample(cfg, 123, a);
    const Params q = generate_sample(cfg, 123, b);
    CHECK(p.values() == q.values());
    cfg.seed = 43;
    const Params r = generate_sample(cfg, 123, b);
    CHECK(p.values() != r.values());
}

TEST_CASE("domains") {
    SweepConfig cfg;
    cfg.inject_rate = 0.0;
    cfg.domain = Domain::unit_modulus;
    for (std::uint64_t i = 0; i < 50; ++i) {
        SamplePlan plan;
        for (Complex v : generate_sample(cfg, i, plan).values()) CHECK(std::abs(v) == doctest::Approx(1.0));
    }
    cfg.domain = Domain::positive_real;
    for (std::uint64_t i = 0; i < 50; ++i) {
        SamplePlan plan;
        for (Complex v : generate_sample(cfg, i, plan).values()) {
            CHECK(v.imag() == 0.0);
            CHECK(v.real() >= 0.1 - 1e-12);
            CHECK(v.real() <= 10.0 + 1e-12);
        }
    }
}

TEST_CASE("make_reducible satisfies the requested condition") {
    const Params base{1.3, 0.7, Complex(2, 1), 0.4, Complex(0, 3), 5.0, std::nullopt, std::nullopt};
    for (ReducibleCase c : {ReducibleCase::equal_1, ReducibleCase::equal_2, ReducibleCase::distinct_i,
                            ReducibleCase::distinct_ii, ReducibleCase::distinct_iii, ReducibleCase::distinct_iv}) {
        CHECK(evaluate_condition(make_reducible(base, c), c).holds);
    }
}

TEST_CASE("config validation") {
    SweepConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.samples = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.log10_min = 2.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.inject_rate = 1.5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("sweep output does not depend on thread count") {
    SweepConfig cfg;
    cfg.samples = 2000;
    cfg.domain = Domain::general_complex;
    cfg.threads = 1;
    const std::string one = sweep_to_json(run_sweep(cfg)).dump();
    cfg.threads = 4;
    const std::string four = sweep_to_json(run_sweep(cfg)).dump();
    CHECK(one == four);
}

TEST_CASE("small positive-real sweep passes") {
    SweepConfig cfg;
    cfg.samples = 1000;
    const SweepSummary s = run_sweep(cfg);
    CHECK(s.passed());
    CHECK(s.disagreements.empty());
    CHECK(s.injected_equal == 50);
    CHECK(s.injected_distinct == 50);
    CHECK(s.witness_checks == 100);
    CHECK(s.witness_failures == 0);
    CHECK(s.agree_reducible >= 100);
}
