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

#include <algorithm>
#include <array>

#include "g7hecke/errors.hpp"
#include "g7hecke/matrix2.hpp"

using namespace g7hecke;

namespace {
bool mat_close(const Mat2& x, const Mat2& y, double tol = 1e-12) { return (x - y).max_abs() <= tol; }
bool parallel(const Vec2& u, const Vec2& v) { return std::abs(cross(u, v)) <= 1e-12 * std::max(1.0, std::abs(u.v1) + std::abs(u.v2)); }
}  // namespace

TEST_CASE("mul examples") {
    const Mat2 i = Mat2::identity();
    CHECK(mat_close(i * i, i));
    const Mat2 swap{0, 1, 1, 0};
    CHECK(mat_close(swap * swap, i));
    // Cayley-Hamilton for s2 at x2 = y1 = 1, y2 = 2.
    const Mat2 s2{3, 1, -2, 0};
    CHECK(mat_close(s2 * s2, 3.0 * s2 - 2.0 * i));
}

TEST_CASE("inverse examples") {
    CHECK(mat_close(inverse(Mat2::identity()), Mat2::identity()));
    CHECK(mat_close(inverse(Mat2{2, 0, 0, 4}), Mat2{0.5, 0, 0, 0.25}));
    CHECK_THROWS_AS((void)inverse(Mat2{1, 1, 0, 0}), SingularMatrix);
    const Mat2 m{Complex(1, 2), 3, Complex(0, -1), 4};
    CHECK(mat_close(m * inverse(m), Mat2::identity()));
}

TEST_CASE("eigen_directions examples") {
    auto e = eigen_directions(Mat2::identity());
    CHECK(e.kind == EigenKind::Scalar);
    REQUIRE(e.eigenvalues.size() == 1);
    CHECK(std::abs(e.eigenvalues[0] - 1.0) < 1e-15);
    CHECK(e.directions.empty());

    e = eigen_directions(Mat2{1, 1, 0, 1});
    CHECK(e.kind == EigenKind::Jordan);
    REQUIRE(e.directions.size() == 1);
    CHECK(parallel(e.directions[0], {1, 0}));

    e = eigen_directions(Mat2{5, 1, -6, 0});
    CHECK(e.kind == EigenKind::Semisimple);
    REQUIRE(e.eigenvalues.size() == 2);
    std::array<double, 2> ev{e.eigenvalues[0].real(), e.eigenvalues[1].real()};
    std::sort(ev.begin(), ev.end());
    CHECK(ev[0] == doctest::Approx(2.0));
    CHECK(ev[1] == doctest::Approx(3.0));
    for (const Vec2& v : e.directions) CHECK(maps_parallel(Mat2{5, 1, -6, 0}, v, 1e-12));
}

TEST_CASE("normalized divides by the largest component") {
    const Vec2 v = Vec2{2, Complex(0, -4)}.normalized();
    CHECK(std::abs(v.v2 - 1.0) < 1e-15);
    CHECK(std::abs(v.v1 - Complex(0, 0.5)) < 1e-15);
}

TEST_CASE("common_eigenvector examples") {
    const std::array<Mat2, 2> scalars{Mat2::identity(), Mat2::identity()};
    auto v = common_eigenvector(scalars);
    REQUIRE(v);
    CHECK(parallel(*v, {1, 0}));

    // (1, 0) is an eigenvector of both.
    const std::array<Mat2, 2> upper{Mat2{1, 1, 0, 2}, Mat2{3, 0, 0, 4}};
    v = common_eigenvector(upper);
    REQUIRE(v);
    CHECK(parallel(*v, {1, 0}));

    const std::array<Mat2, 2> none{Mat2{1, 1, 0, 2}, Mat2{0, 1, 2, 0}};
    CHECK_FALSE(common_eigenvector(none));

    // Both shared eigenvectors are reported.
    const std::array<Mat2, 2> diag{Mat2{1, 0, 0, 2}, Mat2{3, 0, 0, 4}};
    CHECK(common_eigenvectors(diag).size() == 2);
}

TEST_CASE("maps_parallel and same_direction") {
    const Mat2 m{2, 1, 0, 3};
    CHECK(maps_parallel(m, {1, 0}));
    CHECK_FALSE(maps_parallel(m, {0, 1}));
    CHECK(same_direction({1, 2}, {Complex(0, 2), Complex(0, 4)}));
    CHECK_FALSE(same_direction({1, 2}, {2, 1}));
}
