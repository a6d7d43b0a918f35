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

#include "g7hecke/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace g7hecke {

double principal_arg(Complex z) {
    if (z == Complex{0.0, 0.0}) return 0.0;
    double a = std::atan2(z.imag(), z.real());
    // atan2 yields -pi for (negative, -0.0); the interval is open at -pi.
    if (a <= -std::numbers::pi) a = std::numbers::pi;
    return a;
}

PolarForm to_polar(Complex z) { return {std::abs(z), principal_arg(z)}; }

Complex from_polar(PolarForm p) { return std::polar(p.modulus, p.argument); }

Complex principal_sqrt(Complex z) {
    if (z == Complex{0.0, 0.0}) return {0.0, 0.0};
    // std::sqrt is accurate everywhere except for the sign-of-zero choice on
    // the cut; normalize -0.0 imaginary parts so the cut belongs to alpha = pi.
    Complex w = std::sqrt(Complex{z.real(), z.imag() == 0.0 ? 0.0 : z.imag()});
    if (w.real() == 0.0 && w.imag() < 0.0) w = -w;
    return w;
}

bool approx_eq(Complex a, Complex b, double tol) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

bool approx_eq_rel(Complex a, Complex b, double tol) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= tol * scale;
}

}  // namespace g7hecke
