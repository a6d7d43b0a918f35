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

#include "g7hecke/irreducibility.hpp"

#include <algorithm>
#include <array>

#include "g7hecke/errors.hpp"

namespace g7hecke {

std::string_view to_string(Regime r) { return r == Regime::equal_x ? "equal_x" : "distinct_x"; }

std::string_view to_string(Decision d) { return d == Decision::irreducible ? "irreducible" : "reducible"; }

std::string_view to_string(ReducibleCase c) {
    switch (c) {
        case ReducibleCase::equal_1: return "equal_1";
        case ReducibleCase::equal_2: return "equal_2";
        case ReducibleCase::distinct_i: return "distinct_i";
        case ReducibleCase::distinct_ii: return "distinct_ii";
        case ReducibleCase::distinct_iii: return "distinct_iii";
        case ReducibleCase::distinct_iv: return "distinct_iv";
    }
    return "unknown";
}

Regime regime_of(ReducibleCase c) {
    return c == ReducibleCase::equal_1 || c == ReducibleCase::equal_2 ? Regime::equal_x : Regime::distinct_x;
}

ConditionFlag evaluate_condition(const Params& p, ReducibleCase which, double tol) {
    ConditionFlag f{which, {}, {}, {}, false};
    switch (which) {
        case ReducibleCase::equal_1:
            f = {which, "z1*y2 = y1*z2", p.z1 * p.y2, p.y1 * p.z2};
            break;
        case ReducibleCase::equal_2:
            f = {which, "z1*y1 = y2*z2", p.z1 * p.y1, p.y2 * p.z2};
            break;
        case ReducibleCase::distinct_i:
            f = {which, "x1*y2*z2 = x2*y1*z1", p.x1 * p.y2 * p.z2, p.x2 * p.y1 * p.z1};
            break;
        case ReducibleCase::distinct_ii:
            f = {which, "x1*y1*z2 = x2*y2*z1", p.x1 * p.y1 * p.z2, p.x2 * p.y2 * p.z1};
            break;
        case ReducibleCase::distinct_iii:
            f = {which, "x1*y2*z1 = x2*y1*z2", p.x1 * p.y2 * p.z1, p.x2 * p.y1 * p.z2};
            break;
        case ReducibleCase::distinct_iv:
            f = {which, "x1*y1*z1 = x2*y2*z2", p.x1 * p.y1 * p.z1, p.x2 * p.y2 * p.z2};
            break;
    }
    f.holds = approx_eq_rel(f.lhs, f.rhs, tol);
    return f;
}

std::optional<Vec2> OracleVerdict::witness() const {
    if (directions.empty()) return std::nullopt;
    return directions.front();
}

bool Verdict::consistent() const { return agreement || (branch_diagnosis && branch_diagnosis->resolved); }

Regime regime(const Params& p, double tol) { return approx_eq(p.x1, p.x2, tol) ? Regime::equal_x : Regime::distinct_x; }

Regime resolve_regime(const Params& p, ForceRegime force, double tol) {
    switch (force) {
        case ForceRegime::equal: return Regime::equal_x;
        case ForceRegime::distinct: return Regime::distinct_x;
        case ForceRegime::automatic: break;
    }
    return regime(p, tol);
}

GeneratorTriple build_for_regime(const Params& p, Regime regime, RootSign sign) {
    return regime == Regime::equal_x ? build_equal_x(p, sign) : build_general(p, sign);
}

TheoremVerdict theorem_verdict(const Params& p, Regime regime, double tol) {
    static constexpr std::array kEqual{ReducibleCase::equal_1, ReducibleCase::equal_2};
    static constexpr std::array kDistinct{ReducibleCase::distinct_i, ReducibleCase::distinct_ii,
                                          ReducibleCase::distinct_iii, ReducibleCase::distinct_iv};
    TheoremVerdict out;
    out.regime = regime;
    const auto add = [&](const auto& cases) {
        for (ReducibleCase c : cases) out.conditions.push_back(evaluate_condition(p, c, tol));
    };
    if (regime == Regime::equal_x) {
        add(kEqual);
    } else {
        add(kDistinct);
    }
    const bool any = std::any_of(out.conditions.begin(), out.conditions.end(),
                                 [](const ConditionFlag& f) { return f.holds; });
    out.decision = any ? Decision::reducible : Decision::irreducible;
    return out;
}

OracleVerdict oracle_verdict(const GeneratorTriple& g, double tol) {
    const std::array ms{g.s1, g.s2, g.s3};
    OracleVerdict out;
    out.directions = common_eigenvectors(ms, tol);
    out.decision = out.directions.empty() ? Decision::irreducible : Decision::reducible;
    return out;
}

Vec2 invariant_vector_predicted(const Params& p, ReducibleCase which, RootSign sign, double tol) {
    const ConditionFlag f = evaluate_condition(p, which, tol);
    if (!f.holds) throw ConditionNotSatisfied("condition " + f.equation + " does not hold");
    if (regime_of(which) == Regime::equal_x) return Vec2{-1.0 / (p.x2 * p.y2), 1.0}.normalized();

    const GeneratorTriple g = build_general(p, sign);
    if (std::abs(g.s1.b) <= tol * g.s1.max_abs()) {
        throw ContradictoryCase("s1(1,2) vanishes while " + f.equation + " holds");
    }
    const Mat2 t = conjugator_T(p, g, tol);
    return (t * Vec2{0.0, 1.0}).normalized();
}

BranchDiagnosis branch_diagnosis(const Params& p, const Verdict& v, double tol) {
    BranchDiagnosis out;
    out.flipped_sign = flipped(v.r_sign);
    out.conditions = v.conditions;
    if (v.agreement) return out;

    out.applicable = true;
    const GeneratorTriple g = build_for_regime(p, v.regime, out.flipped_sign);
    const OracleVerdict o = oracle_verdict(g, tol);
    out.flipped_r = g.r_used;
    out.flipped_oracle_decision = o.decision;
    out.flipped_directions = o.directions;
    out.resolved = o.decision == v.theorem_decision;
    return out;
}

Verdict decide(const Params& p, const DecisionOptions& opts) {
    p.validate();
    Verdict v;
    v.regime = resolve_regime(p, opts.force_regime, opts.tolerance);
    v.r_sign = opts.r_sign;

    const GeneratorTriple g = build_for_regime(p, v.regime, opts.r_sign);
    v.r_used = g.r_used;

    TheoremVerdict t = theorem_verdict(p, v.regime, opts.tolerance);
    v.theorem_decision = t.decision;
    v.conditions = std::move(t.conditions);

    OracleVerdict o = oracle_verdict(g, opts.tolerance);
    v.oracle_decision = o.decision;
    v.invariant_vector = o.witness();
    v.invariant_directions = std::move(o.directions);

    v.agreement = v.theorem_decision == v.oracle_decision;
    v.braid_residual = braid_residual(g);
    v.hecke = hecke_residuals(g, p);
    if (!v.agreement) v.branch_diagnosis = branch_diagnosis(p, v, opts.tolerance);
    return v;
}

}  // namespace g7hecke
