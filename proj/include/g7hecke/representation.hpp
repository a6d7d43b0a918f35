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

// Two-dimensional representation of the cyclotomic Hecke algebra of G7.
//
// G7 = < t, u, s | t^2 = u^3 = s^3 = 1, tus = ust = stu >, and its braid
// group is < s1, s2, s3 | s1 s2 s3 = s2 s3 s1 = s3 s1 s2 >. The Hecke algebra
// adds (s1 - x1)(s1 - x2) = 0, prod_i (s2 - y_i) = 0, prod_i (s3 - z_i) = 0.
// On the two-dimensional module the generators act by
//
//   s1 = [[x1, (y1 + y2)/(y1 y2) - (z1 + z2) x2 / r], [0, x2]]
//   s2 = [[y1 + y2, 1/x1], [-y1 y2 x1, 0]]
//   s3 = [[0, -r/(y1 y2 x1 x2)], [r, z1 + z2]]
//
// with r a square root of x1 x2 y1 y2 z1 z2. The indeterminates y3 and z3
// only enter the cubic relations.

#pragma once

#include <optional>

#include "g7hecke/exact_algebra.hpp"
#include "g7hecke/matrix2.hpp"
#include "g7hecke/numerics.hpp"

namespace g7hecke {

enum class RootSign : int { plus = 1, minus = -1 };

inline RootSign flipped(RootSign s) { return s == RootSign::plus ? RootSign::minus : RootSign::plus; }
inline double as_factor(RootSign s) { return static_cast<double>(static_cast<int>(s)); }

struct Params {
    Complex x1, x2, y1, y2, z1, z2;
    std::optional<Complex> y3;
    std::optional<Complex> z3;

    /// Throws InvalidParams on a zero or non-finite value.
    void validate() const;
    [[nodiscard]] VarValues values() const { return {x1, x2, y1, y2, z1, z2}; }
    [[nodiscard]] Complex delta() const { return x1 * x2 * y1 * y2 * z1 * z2; }
    /// Same six values scaled by a common factor (y3, z3 dropped).
    [[nodiscard]] Params scaled(Complex lambda) const;
};

/// sign * principal_sqrt(x1 x2 y1 y2 z1 z2).
Complex root_value(const Params& p, RootSign sign = RootSign::plus);

struct GeneratorTriple {
    Mat2 s1, s2, s3;
    Complex r_used;
    RootSign r_sign = RootSign::plus;
};

GeneratorTriple build_general(const Params& p, RootSign sign = RootSign::plus);

/// Generators for x1 = x2, with x2 standing in for both.
GeneratorTriple build_equal_x(const Params& p, RootSign sign = RootSign::plus);

/// max(|s1s2s3 - s2s3s1|, |s1s2s3 - s3s1s2|) / |s1s2s3|, entrywise max moduli.
double braid_residual(const GeneratorTriple& g);

struct HeckeResiduals {
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
    std::optional<double> s2_cubic;
    std::optional<double> s3_cubic;

    [[nodiscard]] double max() const;
};

/// Residuals of the Hecke relations, each scaled by prod_i (|s| + |root_i|).
/// Cubic residuals are reported when y3 and z3 are present.
HeckeResiduals hecke_residuals(const GeneratorTriple& g, const Params& p);

/// [[1, s1(1,2)/(x2 - x1)], [0, 1]], which conjugates s1 to diag(x1, x2).
/// Throws DegenerateRegime when x1 ~ x2 or s1(1,2) ~ 0.
Mat2 conjugator_T(const Params& p, const GeneratorTriple& g, double tol = kVerdictTolerance);

}  // namespace g7hecke
