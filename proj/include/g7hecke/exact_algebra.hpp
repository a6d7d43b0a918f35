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

// Exact arithmetic in Z[x1, x2, y1, y2, z1, z2][r] / (r^2 - x1 x2 y1 y2 z1 z2)
// and in its field of fractions.
//
// The extension ring is an integral domain (the product of the six variables
// is not a square), so p + q*r is zero iff p and q are both zero, and two
// fractions are equal iff they cross-multiply to the same element. Fractions
// are never reduced by a gcd; only common monomial and integer content is
// cancelled.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "g7hecke/numerics.hpp"

namespace g7hecke {

using Integer = boost::multiprecision::cpp_int;

enum class Var : std::uint8_t { x1 = 0, x2, y1, y2, z1, z2 };
inline constexpr std::size_t kNumVars = 6;
inline constexpr std::array<std::string_view, kNumVars> kVarNames = {"x1", "x2", "y1", "y2", "z1", "z2"};

/// Values of (x1, x2, y1, y2, z1, z2) in that order.
using VarValues = std::array<Complex, kNumVars>;

struct Monomial {
    std::array<std::uint8_t, kNumVars> exps{};

    static Monomial of(Var v, unsigned e = 1);

    [[nodiscard]] unsigned degree(Var v) const { return exps[static_cast<std::size_t>(v)]; }
    [[nodiscard]] unsigned total_degree() const;
    [[nodiscard]] bool is_one() const { return total_degree() == 0; }
    [[nodiscard]] std::string to_string() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Componentwise minimum of exponents.
Monomial gcd(const Monomial& a, const Monomial& b);

class Polynomial {
public:
    using TermMap = std::map<Monomial, Integer>;

    Polynomial() = default;
    Polynomial(long long c);  // NOLINT(google-explicit-constructor): integer literals read naturally
    Polynomial(const Integer& c);  // NOLINT(google-explicit-constructor)
    Polynomial(Var v);  // NOLINT(google-explicit-constructor)
    Polynomial(Monomial m, Integer c);

    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] unsigned max_degree(Var v) const;

    /// Gcd of all monomials in the support (1 for the zero polynomial).
    [[nodiscard]] Monomial monomial_content() const;
    /// Exact division by a monomial that divides every term.
    [[nodiscard]] Polynomial divide(const Monomial& m) const;
    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    [[nodiscard]] Integer integer_content() const;
    /// Exact division of every coefficient.
    [[nodiscard]] Polynomial divide(const Integer& c) const;

    [[nodiscard]] Complex eval(const VarValues& at) const;
    /// Sum of |term| at the point; a magnitude scale for cancellation tests.
    [[nodiscard]] double eval_abs(const VarValues& at) const;

    /// Terms in descending lexicographic order (x1 > x2 > ... > z2), e.g. "x1^2*y1 - 3*z2 + 1".
    [[nodiscard]] std::string to_string() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    void add_term(const Monomial& m, const Integer& c);

    TermMap terms_;
};

Polynomial pow(const Polynomial& base, unsigned e);

/// x1*x2*y1*y2*z1*z2, the square of r.
const Polynomial& delta();

/// p + q*r with r^2 = delta().
class ExtElem {
public:
    ExtElem() = default;
    ExtElem(Polynomial p);  // NOLINT(google-explicit-constructor)
    ExtElem(long long c) : ExtElem(Polynomial(c)) {}  // NOLINT(google-explicit-constructor)
    ExtElem(Var v) : ExtElem(Polynomial(v)) {}  // NOLINT(google-explicit-constructor)
    ExtElem(Polynomial p, Polynomial q);

    static ExtElem r();

    [[nodiscard]] const Polynomial& rational_part() const { return p_; }
    [[nodiscard]] const Polynomial& root_part() const { return q_; }
    [[nodiscard]] bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

    /// p - q*r.
    [[nodiscard]] ExtElem conjugate() const { return {p_, -q_}; }
    /// (p + q r)(p - q r) = p^2 - q^2 * delta.
    [[nodiscard]] Polynomial norm() const;

    [[nodiscard]] Monomial monomial_content() const;
    [[nodiscard]] ExtElem divide(const Monomial& m) const { return {p_.divide(m), q_.divide(m)}; }
    [[nodiscard]] Integer integer_content() const;
    [[nodiscard]] ExtElem divide(const Integer& c) const { return {p_.divide(c), q_.divide(c)}; }

    [[nodiscard]] Complex eval(const VarValues& at, Complex r_value) const;
    [[nodiscard]] double eval_abs(const VarValues& at, Complex r_value) const;

    /// Rational-part terms followed by root-part terms, each suffixed with "*r".
    [[nodiscard]] std::string to_string() const;

    ExtElem& operator+=(const ExtElem& o);
    ExtElem& operator-=(const ExtElem& o);

    friend ExtElem operator+(ExtElem a, const ExtElem& b) { return a += b; }
    friend ExtElem operator-(ExtElem a, const ExtElem& b) { return a -= b; }
    friend ExtElem operator-(const ExtElem& a) { return {-a.p_, -a.q_}; }
    /// (p1 + q1 r)(p2 + q2 r) = (p1 p2 + q1 q2 delta) + (p1 q2 + p2 q1) r.
    friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
    friend bool operator==(const ExtElem& a, const ExtElem& b) = default;

private:
    Polynomial p_;
    Polynomial q_;
};

ExtElem pow(const ExtElem& base, unsigned e);

/// num / den with den != 0. Equality is by cross-multiplication.
class RatElem {
public:
    RatElem() : RatElem(ExtElem(0)) {}
    RatElem(ExtElem num);  // NOLINT(google-explicit-constructor)
    RatElem(long long c) : RatElem(ExtElem(c)) {}  // NOLINT(google-explicit-constructor)
    RatElem(Var v) : RatElem(ExtElem(v)) {}  // NOLINT(google-explicit-constructor)
    RatElem(Polynomial p) : RatElem(ExtElem(std::move(p))) {}  // NOLINT(google-explicit-constructor)
    /// Throws DivisionByZero when den is zero.
    RatElem(ExtElem num, ExtElem den);

    static RatElem r() { return RatElem(ExtElem::r()); }

    [[nodiscard]] const ExtElem& num() const { return num_; }
    [[nodiscard]] const ExtElem& den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

    /// Throws DivisionByZero when this is zero.
    [[nodiscard]] RatElem inv() const;

    [[nodiscard]] std::string to_string() const;

    friend RatElem operator+(const RatElem& a, const RatElem& b);
    friend RatElem operator-(const RatElem& a, const RatElem& b);
    friend RatElem operator-(const RatElem& a) { return {-a.num_, a.den_}; }
    friend RatElem operator*(const RatElem& a, const RatElem& b);
    friend RatElem operator/(const RatElem& a, const RatElem& b) { return a * b.inv(); }
    friend bool operator==(const RatElem& a, const RatElem& b);

    RatElem& operator+=(const RatElem& o) { return *this = *this + o; }
    RatElem& operator-=(const RatElem& o) { return *this = *this - o; }
    RatElem& operator*=(const RatElem& o) { return *this = *this * o; }

private:
    struct Unchecked {};
    RatElem(ExtElem num, ExtElem den, Unchecked);
    void cancel_content();

    ExtElem num_;
    ExtElem den_;
};

inline bool rat_equals(const RatElem& a, const RatElem& b) { return a == b; }
inline RatElem rat_inv(const RatElem& a) { return a.inv(); }

/// Images of a subset of the variables; unlisted variables map to themselves.
using Assignment = std::map<Var, RatElem>;

/// Ring homomorphism image of e under the assignment with r sent to r_image.
///
/// Throws InconsistentRootImage unless r_image^2 equals the image of delta(),
/// and DenominatorVanishes when the image of the denominator is zero.
RatElem substitute(const RatElem& e, const Assignment& assignment, const RatElem& r_image);

/// Complex value at a point. Throws InconsistentRootImage when r_value^2 is
/// not delta at the point (relative 1e-9) and DenominatorVanishes when the
/// denominator cancels to within tol of its term magnitudes.
Complex eval_numeric(const RatElem& e, const VarValues& at, Complex r_value, double tol = kVerdictTolerance);

}  // namespace g7hecke
