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

#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace g7hecke {

using Complex = std::complex<double>;

/// Tolerance used for verdicts (relative, with an absolute floor of 1).
inline constexpr double kVerdictTolerance = 1e-9;
/// Tolerance used for internal self-consistency checks.
inline constexpr double kSelfCheckTolerance = 1e-12;

/// Polar form with the argument normalized to (-pi, pi].
struct PolarForm {
    double modulus = 0.0;
    double argument = 0.0;
};

/// Principal argument in (-pi, pi]. The argument of 0 is 0.
double principal_arg(Complex z);

PolarForm to_polar(Complex z);
Complex from_polar(PolarForm p);

/// sqrt(rho) * exp(i*alpha/2) for z = rho * exp(i*alpha), alpha in (-pi, pi].
///
/// Differs from std::sqrt only on the negative real axis with a negative
/// zero imaginary part, where std::sqrt follows the sign of zero and returns
/// -i*sqrt(rho). Here the cut is closed on the upper side: sqrt(-1) = i.
Complex principal_sqrt(Complex z);

/// |a - b| <= tol * max(1, |a|, |b|).
bool approx_eq(Complex a, Complex b, double tol);

/// |a - b| <= tol * max(|a|, |b|). No absolute floor; invariant under
/// rescaling both arguments by the same nonzero factor.
bool approx_eq_rel(Complex a, Complex b, double tol);

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace g7hecke
