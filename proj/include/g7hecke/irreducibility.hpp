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

// Irreducibility of the specialized representation.
//
// Closed-form criteria:
//   x1 = x2:  irreducible iff z1 y2 != y1 z2 and z1 y1 != y2 z2.
//   x1 != x2: irreducible iff x1 y2 z2 != x2 y1 z1, x1 y1 z2 != x2 y2 z1,
//             x1 y2 z1 != x2 y1 z2 and x1 y1 z1 != x2 y2 z2.
// The oracle decides independently: a two-dimensional representation is
// reducible iff the three generators share an eigendirection. The oracle is
// authoritative; the criteria are what is being checked.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g7hecke/matrix2.hpp"
#include "g7hecke/representation.hpp"

namespace g7hecke {

enum class Regime { equal_x, distinct_x };
enum class Decision { irreducible, reducible };
enum class ForceRegime { automatic, equal, distinct };

/// The reducibility conditions, one per closed-form equality.
enum class ReducibleCase { equal_1, equal_2, distinct_i, distinct_ii, distinct_iii, distinct_iv };

std::string_view to_string(Regime r);
std::string_view to_string(Decision d);
std::string_view to_string(ReducibleCase c);
Regime regime_of(ReducibleCase c);

/// One cross-multiplied equality lhs = rhs. The representation is reducible
/// when any of its regime's equalities holds.
struct ConditionFlag {
    ReducibleCase which;
    std::string equation;
    Complex lhs;
    Complex rhs;
    bool holds = false;
};

ConditionFlag evaluate_condition(const Params& p, ReducibleCase which, double tol = kVerdictTolerance);

struct TheoremVerdict {
    Regime regime = Regime::distinct_x;
    Decision decision = Decision::irreducible;
    std::vector<ConditionFlag> conditions;
};

struct OracleVerdict {
    Decision decision = Decision::irreducible;
    /// Every shared eigendirection found (empty iff irreducible).
    std::vector<Vec2> directions;

    [[nodiscard]] std::optional<Vec2> witness() const;
};

struct BranchDiagnosis {
    bool applicable = false;
    RootSign flipped_sign = RootSign::minus;
    Complex flipped_r;
    Decision flipped_oracle_decision = Decision::irreducible;
    std::vector<Vec2> flipped_directions;
    /// True when the oracle under the flipped root agrees with the theorem.
    bool resolved = false;
    std::vector<ConditionFlag> conditions;
};

struct DecisionOptions {
    double tolerance = kVerdictTolerance;
    RootSign r_sign = RootSign::plus;
    ForceRegime force_regime = ForceRegime::automatic;
};

struct Verdict {
    Regime regime = Regime::distinct_x;
    RootSign r_sign = RootSign::plus;
    Complex r_used;
    Decision theorem_decision = Decision::irreducible;
    std::vector<ConditionFlag> conditions;
    Decision oracle_decision = Decision::irreducible;
    std::optional<Vec2> invariant_vector;
    std::vector<Vec2> invariant_directions;
    bool agreement = false;
    double braid_residual = 0.0;
    HeckeResiduals hecke;
    std::optional<BranchDiagnosis> branch_diagnosis;

    /// Agreement, or a disagreement that the flipped root resolves.
    [[nodiscard]] bool consistent() const;
};

/// equal_x iff approx_eq(x1, x2, tol).
Regime regime(const Params& p, double tol = kVerdictTolerance);
Regime resolve_regime(const Params& p, ForceRegime force, double tol = kVerdictTolerance);

GeneratorTriple build_for_regime(const Params& p, Regime regime, RootSign sign = RootSign::plus);

TheoremVerdict theorem_verdict(const Params& p, Regime regime, double tol = kVerdictTolerance);

OracleVerdict oracle_verdict(const GeneratorTriple& g, double tol = kVerdictTolerance);

/// Invariant line implied by a reducibility condition: (-1/(x2 y2), 1) in
/// the equal regime, T e2 in the distinct regime.
///
/// Throws ConditionNotSatisfied when the condition does not hold, and
/// ContradictoryCase when s1(1,2) vanishes in the distinct regime (then T
/// does not exist although a condition holds).
Vec2 invariant_vector_predicted(const Params& p, ReducibleCase which, RootSign sign = RootSign::plus,
                                double tol = kVerdictTolerance);

/// Re-runs the oracle with the opposite root. Not applicable when the
/// verdict already agrees.
BranchDiagnosis branch_diagnosis(const Params& p, const Verdict& v, double tol = kVerdictTolerance);

Verdict decide(const Params& p, const DecisionOptions& opts = {});

}  // namespace g7hecke
