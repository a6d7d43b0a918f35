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

#include <random>

#include "g7hecke/errors.hpp"
#include "g7hecke/irreducibility.hpp"
#include "g7hecke/sweep.hpp"

using namespace g7hecke;

namespace {

Params make(Complex x1, Complex x2, Complex y1, Complex y2, Complex z1, Complex z2) {
    return {x1, x2, y1, y2, z1, z2, std::nullopt, std::nullopt};
}

bool invariant_under_all(const GeneratorTriple& g, const Vec2& v) {
    return maps_parallel(g.s1, v) && maps_parallel(g.s2, v) && maps_parallel(g.s3, v);
}

}  // namespace

TEST_CASE("regime examples") {
    CHECK(regime(make(1, 1, 1, 1, 1, 1)) == Regime::equal_x);
    CHECK(regime(make(1, 2, 1, 1, 1, 1)) == Regime::distinct_x);
    CHECK(regime(make(1, 1 + 1e-15, 1, 1, 1, 1)) == Regime::equal_x);
    CHECK(resolve_regime(make(1, 2, 1, 1, 1, 1), ForceRegime::equal) == Regime::equal_x);
    CHECK(resolve_regime(make(1, 1, 1, 1, 1, 1), ForceRegime::distinct) == Regime::distinct_x);
}

TEST_CASE("theorem_verdict examples") {
    TheoremVerdict t = theorem_verdict(make(1, 1, 1, 2, 3, 6), Regime::equal_x);
    CHECK(t.decision == Decision::reducible);
    CHECK(t.conditions.at(0).holds);
    CHECK(t.conditions.at(0).lhs == Complex(6.0));

    t = theorem_verdict(make(1, 1, 2, 3, 5, 7), Regime::equal_x);
    CHECK(t.decision == Decision::irreducible);

    t = theorem_verdict(make(1, 2, 1, 1, 2, 1), Regime::distinct_x);
    CHECK(t.decision == Decision::reducible);
    REQUIRE(t.conditions.size() == 4);
    CHECK_FALSE(t.conditions[0].holds);
    CHECK_FALSE(t.conditions[1].holds);
    CHECK(t.conditions[2].holds);
    CHECK(t.conditions[2].which == ReducibleCase::distinct_iii);
    // x1*y1*z1 = 2 = x2*y2*z2 as well.
    CHECK(t.conditions[3].holds);
}

TEST_CASE("oracle_verdict examples") {
    OracleVerdict o = oracle_verdict(build_equal_x(make(1, 1, 1, 1, 1, 1)));
    CHECK(o.decision == Decision::reducible);
    REQUIRE(o.witness());
    CHECK(invariant_under_all(build_equal_x(make(1, 1, 1, 1, 1, 1)), *o.witness()));

    o = oracle_verdict(build_equal_x(make(1, 1, 2, 3, 5, 7)));
    CHECK(o.decision == Decision::irreducible);
    CHECK_FALSE(o.witness());

    // Case 1 at x2 = 1, y = (1, 2), z2 = 4, so z1 = 2.
    const Params p = make(1, 1, 1, 2, 2, 4);
    o = oracle_verdict(build_equal_x(p));
    CHECK(o.decision == Decision::reducible);
    bool found = false;
    for (const Vec2& d : o.directions) found = found || same_direction(d, {-0.5, 1.0});
    CHECK(found);
}

TEST_CASE("invariant_vector_predicted") {
    const Params case1 = make(2, 2, 3, 5, 6, 10);  // z1*y2 = 30 = y1*z2
    const Vec2 u = invariant_vector_predicted(case1, ReducibleCase::equal_1);
    CHECK(same_direction(u, {-1.0 / 10.0, 1.0}));
    const GeneratorTriple g = build_equal_x(case1);
    CHECK(invariant_under_all(g, u));
    CHECK(std::abs((g.s3 * u).v2 - 10.0 * u.v2) < 1e-12);

    const Params case2 = make(2, 2, 3, 5, 10, 6);  // z1*y1 = 30 = y2*z2
    const Vec2 v = invariant_vector_predicted(case2, ReducibleCase::equal_2);
    const GeneratorTriple h = build_equal_x(case2);
    CHECK(invariant_under_all(h, v));
    CHECK(std::abs((h.s3 * v).v2 - (6.0 * 5.0 / 3.0) * v.v2) < 1e-12);

    // Distinct case (i): x1*y2*z2 = 4 = x2*y1*z1.
    const Params di = make(1, 4, 1, 1, 1, 4);
    const Vec2 t = invariant_vector_predicted(di, ReducibleCase::distinct_i);
    CHECK(invariant_under_all(build_general(di), t));

    CHECK_THROWS_AS((void)invariant_vector_predicted(make(1, 1, 2, 3, 5, 7), ReducibleCase::equal_1),
                    ConditionNotSatisfied);
}

TEST_CASE("decide at all ones and an irreducible point") {
    Verdict v = decide(make(1, 1, 1, 1, 1, 1));
    CHECK(v.regime == Regime::equal_x);
    CHECK(v.theorem_decision == Decision::reducible);
    CHECK(v.oracle_decision == Decision::reducible);
    CHECK(v.agreement);
    CHECK(v.invariant_vector);
    CHECK_FALSE(v.branch_diagnosis);

    v = decide(make(1, 1, 2, 3, 5, 7));
    CHECK(v.theorem_decision == Decision::irreducible);
    CHECK(v.agreement);
    CHECK_FALSE(v.invariant_vector);
    CHECK_THROWS_AS((void)decide(make(1, 1, 0, 3, 5, 7)), InvalidParams);
}

TEST_CASE("branch diagnosis resolves a principal-branch mismatch") {
    // Case (i) with x2*y1*z1 = -6 while the principal root of delta = 36 is +6.
    const Params p = make(-6, -1, 2, 1, 3, 1);
    const Verdict v = decide(p);
    CHECK(v.regime == Regime::distinct_x);
    CHECK(v.theorem_decision == Decision::reducible);
    CHECK(v.oracle_decision == Decision::irreducible);
    CHECK_FALSE(v.agreement);
    REQUIRE(v.branch_diagnosis);
    CHECK(v.branch_diagnosis->applicable);
    CHECK(v.branch_diagnosis->resolved);
    CHECK(v.branch_diagnosis->flipped_sign == RootSign::minus);
    CHECK(v.consistent());

    const Verdict m = decide(p, {kVerdictTolerance, RootSign::minus, ForceRegime::automatic});
    CHECK(m.agreement);
}

TEST_CASE("branch diagnosis is not applicable on agreement") {
    Verdict v = decide(make(1, 2, 3, 4, 5, 6));
    CHECK(v.agreement);
    const BranchDiagnosis b = branch_diagnosis(make(1, 2, 3, 4, 5, 6), v);
    CHECK_FALSE(b.applicable);
}

TEST_CASE("theorem decision is scale robust") {
    SweepConfig cfg;
    cfg.domain = Domain::general_complex;
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> lm(-1.0, 1.0), arg(-3.14159, 3.14159);
    for (std::uint64_t i = 0; i < 400; ++i) {
        SamplePlan plan;
        const Params p = generate_sample(cfg, i, plan);
        const Complex lambda = std::polar(std::pow(10.0, lm(rng)), arg(rng));
        const Regime rg = regime(p);
        CHECK(theorem_verdict(p, rg).decision == theorem_verdict(p.scaled(lambda), rg).decision);
    }
}

TEST_CASE("witnesses of reducible positive-real samples") {
    SweepConfig cfg;
    cfg.inject_rate = 1.0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        SamplePlan plan;
        const Params p = generate_sample(cfg, i, plan);
        REQUIRE(plan.injected);
        const Verdict v = decide(p);
        CHECK(v.agreement);
        CHECK(v.theorem_decision == Decision::reducible);
        REQUIRE(v.invariant_vector);
        CHECK(invariant_under_all(build_for_regime(p, v.regime), *v.invariant_vector));
    }
}
