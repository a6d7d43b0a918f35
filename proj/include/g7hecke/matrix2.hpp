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

#include <optional>
#include <span>
#include <vector>

#include "g7hecke/numerics.hpp"

namespace g7hecke {

struct Vec2 {
    Complex v1;
    Complex v2;

    /// Divides by the largest-modulus component. The zero vector is returned unchanged.
    [[nodiscard]] Vec2 normalized() const;
};

/// Row-major [[a, b], [c, d]].
struct Mat2 {
    Complex a, b, c, d;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 scalar(Complex s) { return {s, 0.0, 0.0, s}; }

    [[nodiscard]] Complex trace() const { return a + d; }
    [[nodiscard]] Complex det() const { return a * d - b * c; }
    /// Largest entry modulus.
    [[nodiscard]] double max_abs() const;
    [[nodiscard]] bool is_finite() const;
};

Mat2 operator+(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x, const Mat2& y);
Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator*(Complex s, const Mat2& x);
Vec2 operator*(const Mat2& m, const Vec2& v);

inline Mat2 mul(const Mat2& x, const Mat2& y) { return x * y; }

/// Throws SingularMatrix when |det| <= tol * max_abs()^2.
Mat2 inverse(const Mat2& m, double tol = kVerdictTolerance);

/// det[u, v] = u1*v2 - u2*v1.
Complex cross(const Vec2& u, const Vec2& v);

/// True when m*v is parallel to v: |det[m v, v]| <= tol * max_abs(m) * |v|^2.
bool maps_parallel(const Mat2& m, const Vec2& v, double tol = kVerdictTolerance);

/// True when u and v span the same line (relative test on det[u, v]).
bool same_direction(const Vec2& u, const Vec2& v, double tol = kVerdictTolerance);

enum class EigenKind { Scalar, Jordan, Semisimple };

struct EigenReport {
    EigenKind kind = EigenKind::Scalar;
    /// One value for Scalar/Jordan, two for Semisimple.
    std::vector<Complex> eigenvalues;
    /// Empty for Scalar (every direction is invariant), otherwise normalized.
    std::vector<Vec2> directions;
};

EigenReport eigen_directions(const Mat2& m, double tol = kVerdictTolerance);

/// Every direction shared by all matrices, using the eigendirections of the
/// first non-scalar matrix as candidates. When all matrices are scalar the
/// single direction (1, 0) is reported.
std::vector<Vec2> common_eigenvectors(std::span<const Mat2> ms, double tol = kVerdictTolerance);

std::optional<Vec2> common_eigenvector(std::span<const Mat2> ms, double tol = kVerdictTolerance);

}  // namespace g7hecke
