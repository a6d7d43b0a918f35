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

#include <numbers>
#include <random>

#include "g7hecke/numerics.hpp"

using namespace g7hecke;
using std::numbers::pi;

namespace {
bool close(Complex a, Complex b) { return std::abs(a - b) <= 1e-14 * std::max(1.0, std::abs(b)); }
}  // namespace

TEST_CASE("principal_sqrt examples") {
    CHECK(close(principal_sqrt(4.0), 2.0));
    CHECK(close(principal_sqrt(-1.0), Complex(0, 1)));
    CHECK(close(principal_sqrt(Complex(0, 2)), Complex(1, 1)));
    CHECK(principal_sqrt(0.0) == Complex(0.0, 0.0));
}

TEST_CASE("principal_sqrt on the negative axis with signed zero") {
    // -1 - 0i still sits on the included side of the cut.
    CHECK(close(principal_sqrt(Complex(-1.0, -0.0)), Complex(0, 1)));
    CHECK(close(principal_sqrt(Complex(-9.0, -0.0)), Complex(0, 3)));
}

TEST_CASE("to_polar examples") {
    auto p = to_polar(1.0);
    CHECK(p.modulus == doctest::Approx(1.0));
    CHECK(p.argument == doctest::Approx(0.0));
    p = to_polar(-1.0);
    CHECK(p.argument == doctest::Approx(pi));
    p = to_polar(Complex(-1.0, -0.0));
    CHECK(p.argument == doctest::Approx(pi));
    p = to_polar(Complex(0, -2));
    CHECK(p.modulus == doctest::Approx(2.0));
    CHECK(p.argument == doctest::Approx(-pi / 2));
}

TEST_CASE("polar round trip") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 1000; ++i) {
        const Complex z(u(rng), u(rng));
        CHECK(std::abs(from_polar(to_polar(z)) - z) <= 1e-13 * std::abs(z));
        const double a = principal_arg(z);
        CHECK(a > -pi);
        CHECK(a <= pi);
    }
}

TEST_CASE("approx_eq examples") {
    CHECK(approx_eq(1.0, 1.0 + 1e-15, 1e-9));
    CHECK_FALSE(approx_eq(0.0, 1e-8, 1e-9));
    // 1e-4 <= 1e-9 * 1e6 = 1e-3 holds.
    CHECK(approx_eq(1e6, 1e6 + 1e-4, 1e-9));
    CHECK_FALSE(approx_eq(1e6, 1e6 + 1e-2, 1e-9));
}

TEST_CASE("approx_eq_rel has no absolute floor") {
    CHECK(approx_eq_rel(1e-20, 1e-20 * (1 + 1e-12), 1e-9));
    CHECK_FALSE(approx_eq_rel(1e-20, 2e-20, 1e-9));
    CHECK(approx_eq_rel(0.0, 0.0, 1e-9));
}

TEST_CASE("sqrt of a square on the right half-plane") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> arg(-pi / 2, pi / 2), lm(-2.0, 2.0);
    for (int i = 0; i < 1000; ++i) {
        const double t = arg(rng);
        if (t <= -pi / 2) continue;
        const Complex z = std::polar(std::pow(10.0, lm(rng)), t);
        CHECK(std::abs(principal_sqrt(z * z) - z) <= 1e-12 * std::abs(z));
    }
    // Boundary t = pi/2 is included.
    const Complex iz(0, 3);
    CHECK(close(principal_sqrt(iz * iz), iz));
}

TEST_CASE("sqrt of a square off the half-plane is the negation") {
    const Complex z = std::polar(1.0, 3 * pi / 4);
    const Complex s = principal_sqrt(z * z);
    CHECK(std::abs(s + z) < 1e-14);
    CHECK(std::abs(s - z) > 1.0);
    const Complex lower(0, -2);
    CHECK(close(principal_sqrt(lower * lower), -lower));
}
