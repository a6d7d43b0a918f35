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

#include "g7hecke/matrix2.hpp"

#include <algorithm>
#include <cmath>

#include "g7hecke/errors.hpp"

namespace g7hecke {

namespace {

double norm2(const Vec2& v) { return std::norm(v.v1) + std::norm(v.v2); }

// Null direction of m - lambda*I, taken from whichever row carries more weight.
Vec2 null_direction(const Mat2& m, Complex lambda) {
    const Complex p = m.a - lambda, q = m.b;
    const Complex s = m.c, t = m.d - lambda;
    const Vec2 from_row1{q, -p};
    const Vec2 from_row2{t, -s};
    return (norm2(from_row1) >= norm2(from_row2) ? from_row1 : from_row2).normalized();
}

}  // namespace

Vec2 Vec2::normalized() const {
    const double m1 = std::abs(v1), m2 = std::abs(v2);
    if (m1 == 0.0 && m2 == 0.0) return *this;
    const Complex pivot = m1 >= m2 ? v1 : v2;
    Vec2 out{v1 / pivot, v2 / pivot};
    // The pivot is exactly 1 after division; pin it to avoid rounding noise.
    (m1 >= m2 ? out.v1 : out.v2) = 1.0;
    return out;
}

double Mat2::max_abs() const { return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)}); }

bool Mat2::is_finite() const {
    return g7hecke::is_finite(a) && g7hecke::is_finite(b) && g7hecke::is_finite(c) && g7hecke::is_finite(d);
}

Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 operator*(Complex s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }

Vec2 operator*(const Mat2& m, const Vec2& v) { return {m.a * v.v1 + m.b * v.v2, m.c * v.v1 + m.d * v.v2}; }

Mat2 inverse(const Mat2& m, double tol) {
    const Complex det = m.det();
    const double scale = m.max_abs();
    if (std::abs(det) <= tol * scale * scale) throw SingularMatrix("matrix is singular within tolerance");
    return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

Complex cross(const Vec2& u, const Vec2& v) { return u.v1 * v.v2 - u.v2 * v.v1; }

bool maps_parallel(const Mat2& m, const Vec2& v, double tol) {
    return std::abs(cross(m * v, v)) <= tol * m.max_abs() * norm2(v);
}

bool same_direction(const Vec2& u, const Vec2& v, double tol) {
    return std::abs(cross(u, v)) <= tol * std::sqrt(norm2(u) * norm2(v));
}

EigenReport eigen_directions(const Mat2& m, double tol) {
    const double scale = m.max_abs();
    const double eps = tol * scale;
    if (std::abs(m.b) <= eps && std::abs(m.c) <= eps && std::abs(m.a - m.d) <= eps) {
        return {EigenKind::Scalar, {(m.a + m.d) / 2.0}, {}};
    }

    const Complex tr = m.trace();
    const Complex disc = (m.a - m.d) * (m.a - m.d) + 4.0 * m.b * m.c;
    if (std::abs(disc) <= tol * scale * scale) {
        const Complex lambda = tr / 2.0;
        return {EigenKind::Jordan, {lambda}, {null_direction(m, lambda)}};
    }

    // Pick the sign that avoids cancellation, then recover the other root from det.
    const Complex root = principal_sqrt(disc);
    const Complex q = std::abs(tr + root) >= std::abs(tr - root) ? (tr + root) / 2.0 : (tr - root) / 2.0;
    const Complex l1 = q;
    const Complex l2 = q != 0.0 ? m.det() / q : tr - q;
    return {EigenKind::Semisimple, {l1, l2}, {null_direction(m, l1), null_direction(m, l2)}};
}

std::vector<Vec2> common_eigenvectors(std::span<const Mat2> ms, double tol) {
    std::vector<Vec2> out;
    const auto first = std::find_if(ms.begin(), ms.end(), [tol](const Mat2& m) {
        return eigen_directions(m, tol).kind != EigenKind::Scalar;
    });
    if (first == ms.end()) {
        out.push_back({1.0, 0.0});
        return out;
    }
    for (const Vec2& candidate : eigen_directions(*first, tol).directions) {
        const bool shared = std::all_of(ms.begin(), ms.end(),
                                        [&](const Mat2& m) { return maps_parallel(m, candidate, tol); });
        if (shared) out.push_back(candidate);
    }
    return out;
}

std::optional<Vec2> common_eigenvector(std::span<const Mat2> ms, double tol) {
    auto all = common_eigenvectors(ms, tol);
    if (all.empty()) return std::nullopt;
    return all.front();
}

}  // namespace g7hecke
