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

// Exact verification of the algebraic identities behind the irreducibility
// criteria. Every check compares two RatElem values by cross-multiplication
// in the extension ring, then spot-evaluates both sides at fixed
// positive-real points.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g7hecke/exact_algebra.hpp"
#include "g7hecke/representation.hpp"

namespace g7hecke {

struct SymMat2 {
    RatElem a, b, c, d;

    static SymMat2 identity() { return {1, 0, 0, 1}; }
    static SymMat2 scalar(const RatElem& s) { return {s, 0, 0, s}; }

    [[nodiscard]] RatElem trace() const { return a + d; }
    [[nodiscard]] RatElem det() const { return a * d - b * c; }
    [[nodiscard]] SymMat2 inverse() const;
    [[nodiscard]] bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
    [[nodiscard]] SymMat2 substituted(const Assignment& assignment, const RatElem& r_image) const;
};

SymMat2 operator+(const SymMat2& x, const SymMat2& y);
SymMat2 operator-(const SymMat2& x, const SymMat2& y);
SymMat2 operator*(const SymMat2& x, const SymMat2& y);

struct SymVec2 {
    RatElem v1, v2;
};

SymVec2 operator*(const SymMat2& m, const SymVec2& v);

struct SymTriple {
    SymMat2 s1, s2, s3;
};

/// Generators over the fraction field with r replaced by sign * r.
SymTriple symbolic_generators(RootSign sign = RootSign::plus);

/// Named expressions from the distinct-x analysis.
namespace sym {
RatElem s1_offdiag();  // (y1 + y2)/(y1 y2) - (z1 + z2) x2 / r
ExtElem w();           // (x1-x2)^2 y1^2 y2^2 z1 z2 + [(y1+y2) r - x1 y1 y2 (z1+z2)][(y1+y2) r - x2 y1 y2 (z1+z2)]
ExtElem alpha();       // x2 y1 y2 z1 + x1 y1 y2 z2 - (y1 + y2) r
ExtElem beta();        // x1 y1 y2 z1 + x2 y1 y2 z2 - (y1 + y2) r
SymMat2 conjugator();  // [[1, s1(1,2)/(x2 - x1)], [0, 1]]
RatElem M();
RatElem P();
RatElem A();
RatElem B();
ExtElem B_bracket();  // B without its x1 x2 z1 z2 / ((x1 - x2)^2 r^3) prefactor
RatElem C();
}  // namespace sym

enum class IdentityStatus { verified, failed, sign_dependent };

std::string_view to_string(IdentityStatus s);

struct IdentityCheck {
    std::string label;
    std::optional<int> sign;
    bool holds = false;
    /// Rendering of lhs - rhs when the check fails (truncated).
    std::string residual;
};

struct IdentityReport {
    std::string name;
    IdentityStatus status = IdentityStatus::failed;
    std::vector<IdentityCheck> checks;
    std::vector<std::string> notes;
};

/// Exact check lhs == rhs plus numeric spot evaluation of both sides.
IdentityCheck check_equal(std::string label, const RatElem& lhs, const RatElem& rhs,
                          std::optional<int> sign = std::nullopt);

IdentityReport verify_s1_offdiag_factorization();
IdentityReport verify_w_factorization();
/// Braid and quadratic Hecke relations for an arbitrary symbolic triple.
IdentityReport verify_braid_and_hecke(const SymTriple& g, std::optional<int> sign);
/// Both root signs.
IdentityReport verify_braid_and_hecke_symbolic();
IdentityReport verify_conjugation_formulas();
/// w vanishes under each closed-form condition, per induced root sign.
IdentityReport verify_w_vanishing();
/// Same for the bracket of B (its prefactor is nonzero).
IdentityReport verify_b_vanishing();
IdentityReport verify_equal_x_invariant_line();

/// Report names accepted by run_identity_suite.
const std::vector<std::string>& identity_names();

/// Runs every report, or only the named one. Throws std::invalid_argument
/// on an unknown name.
std::vector<IdentityReport> run_identity_suite(std::optional<std::string_view> only = std::nullopt);

}  // namespace g7hecke
