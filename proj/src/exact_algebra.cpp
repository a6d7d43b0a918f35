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

#include "g7hecke/exact_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "g7hecke/errors.hpp"

namespace g7hecke {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, unsigned e) {
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    Monomial m;
    m.exps[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(e);
    return m;
}

unsigned Monomial::total_degree() const {
    return std::accumulate(exps.begin(), exps.end(), 0U);
}

std::string Monomial::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (exps[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += kVarNames[i];
        if (exps[i] > 1) out += '^' + std::to_string(exps[i]);
    }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        const unsigned e = unsigned{a.exps[i]} + b.exps[i];
        if (e > 255) throw std::overflow_error("monomial exponent overflow");
        m.exps[i] = static_cast<std::uint8_t>(e);
    }
    return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kNumVars; ++i) m.exps[i] = std::min(a.exps[i], b.exps[i]);
    return m;
}

namespace {

Complex eval_monomial(const Monomial& m, const VarValues& at) {
    Complex v{1.0, 0.0};
    for (std::size_t i = 0; i < kNumVars; ++i) {
        for (unsigned k = 0; k < m.exps[i]; ++k) v *= at[i];
    }
    return v;
}

bool divides(const Monomial& d, const Monomial& m) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (d.exps[i] > m.exps[i]) return false;
    }
    return true;
}

Monomial quotient(const Monomial& m, const Monomial& d) {
    Monomial q;
    for (std::size_t i = 0; i < kNumVars; ++i) q.exps[i] = static_cast<std::uint8_t>(m.exps[i] - d.exps[i]);
    return q;
}

// Joins signed terms as "a - b + c"; bodies are empty for constants.
std::string join_terms(const std::vector<std::pair<Integer, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, body] : terms) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Integer mag = negative ? Integer(-c) : c;
        if (body.empty()) {
            out += mag.str();
        } else if (mag == 1) {
            out += body;
        } else {
            out += mag.str() + '*' + body;
        }
    }
    return out;
}

std::vector<std::pair<Integer, std::string>> descending_terms(const Polynomial& p, bool times_r) {
    std::vector<std::pair<Integer, std::string>> out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        std::string body = it->first.to_string();
        if (times_r) body = body.empty() ? "r" : body + "*r";
        out.emplace_back(it->second, std::move(body));
    }
    return out;
}

}  // namespace

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long long c) : Polynomial(Monomial{}, Integer(c)) {}

Polynomial::Polynomial(const Integer& c) : Polynomial(Monomial{}, c) {}

Polynomial::Polynomial(Var v) : Polynomial(Monomial::of(v), Integer(1)) {}

Polynomial::Polynomial(Monomial m, Integer c) {
    if (c != 0) terms_.emplace(m, std::move(c));
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

unsigned Polynomial::max_degree(Var v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree(v));
    return d;
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty()) return {};
    Monomial g = terms_.begin()->first;
    for (const auto& [m, c] : terms_) g = gcd(g, m);
    return g;
}

Polynomial Polynomial::divide(const Monomial& d) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        if (!divides(d, m)) throw std::domain_error("monomial does not divide polynomial");
        out.terms_.emplace_hint(out.terms_.end(), quotient(m, d), c);
    }
    return out;
}

Integer Polynomial::integer_content() const {
    Integer g = 0;
    for (const auto& [m, c] : terms_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return boost::multiprecision::abs(g);
}

Polynomial Polynomial::divide(const Integer& d) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        if (c % d != 0) throw std::domain_error("integer does not divide polynomial");
        out.terms_.emplace_hint(out.terms_.end(), m, c / d);
    }
    return out;
}

Complex Polynomial::eval(const VarValues& at) const {
    Complex sum{0.0, 0.0};
    for (const auto& [m, c] : terms_) sum += c.convert_to<double>() * eval_monomial(m, at);
    return sum;
}

double Polynomial::eval_abs(const VarValues& at) const {
    double sum = 0.0;
    for (const auto& [m, c] : terms_) sum += std::abs(c.convert_to<double>()) * std::abs(eval_monomial(m, at));
    return sum;
}

std::string Polynomial::to_string() const { return join_terms(descending_terms(*this, false)); }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial out = a;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial pow(const Polynomial& base, unsigned e) {
    Polynomial result(1);
    Polynomial b = base;
    while (e > 0) {
        if (e & 1U) result *= b;
        e >>= 1U;
        if (e > 0) b *= b;
    }
    return result;
}

const Polynomial& delta() {
    static const Polynomial d = [] {
        Monomial m;
        m.exps.fill(1);
        return Polynomial(m, Integer(1));
    }();
    return d;
}

// ----------------------------------------------------------------- ExtElem

ExtElem::ExtElem(Polynomial p) : p_(std::move(p)) {}

ExtElem::ExtElem(Polynomial p, Polynomial q) : p_(std::move(p)), q_(std::move(q)) {}

ExtElem ExtElem::r() { return {Polynomial(0), Polynomial(1)}; }

Polynomial ExtElem::norm() const { return p_ * p_ - q_ * q_ * delta(); }

Monomial ExtElem::monomial_content() const {
    if (p_.is_zero()) return q_.monomial_content();
    if (q_.is_zero()) return p_.monomial_content();
    return gcd(p_.monomial_content(), q_.monomial_content());
}

Integer ExtElem::integer_content() const {
    return boost::multiprecision::gcd(p_.integer_content(), q_.integer_content());
}

Complex ExtElem::eval(const VarValues& at, Complex r_value) const { return p_.eval(at) + q_.eval(at) * r_value; }

double ExtElem::eval_abs(const VarValues& at, Complex r_value) const {
    return p_.eval_abs(at) + q_.eval_abs(at) * std::abs(r_value);
}

std::string ExtElem::to_string() const {
    auto terms = descending_terms(p_, false);
    auto root_terms = descending_terms(q_, true);
    terms.insert(terms.end(), root_terms.begin(), root_terms.end());
    return join_terms(terms);
}

ExtElem& ExtElem::operator+=(const ExtElem& o) {
    p_ += o.p_;
    q_ += o.q_;
    return *this;
}

ExtElem& ExtElem::operator-=(const ExtElem& o) {
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
}

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
    Polynomial p = a.p_ * b.p_;
    Polynomial q = a.p_ * b.q_;
    if (!a.q_.is_zero()) {
        if (!b.q_.is_zero()) p += a.q_ * b.q_ * delta();
        q += a.q_ * b.p_;
    }
    return {std::move(p), std::move(q)};
}

ExtElem pow(const ExtElem& base, unsigned e) {
    ExtElem result(1);
    ExtElem b = base;
    while (e > 0) {
        if (e & 1U) result = result * b;
        e >>= 1U;
        if (e > 0) b = b * b;
    }
    return result;
}

// ----------------------------------------------------------------- RatElem

RatElem::RatElem(ExtElem num) : num_(std::move(num)), den_(1) {}

RatElem::RatElem(ExtElem num, ExtElem den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("fraction with zero denominator");
    cancel_content();
}

RatElem::RatElem(ExtElem num, ExtElem den, Unchecked) : num_(std::move(num)), den_(std::move(den)) {
    cancel_content();
}

void RatElem::cancel_content() {
    if (num_.is_zero()) {
        den_ = ExtElem(1);
        return;
    }
    const Monomial m = gcd(num_.monomial_content(), den_.monomial_content());
    if (!m.is_one()) {
        num_ = num_.divide(m);
        den_ = den_.divide(m);
    }
    Integer g = boost::multiprecision::gcd(num_.integer_content(), den_.integer_content());
    // Sign convention: the leading rational-part (else root-part) coefficient of den is positive.
    const auto& lead = den_.rational_part().is_zero() ? den_.root_part() : den_.rational_part();
    if (lead.terms().rbegin()->second < 0) g = -g;
    if (g != 1) {
        num_ = num_.divide(g);
        den_ = den_.divide(g);
    }
}

RatElem RatElem::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return {den_, num_, Unchecked{}};
}

std::string RatElem::to_string() const {
    if (den_ == ExtElem(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatElem operator+(const RatElem& a, const RatElem& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_, RatElem::Unchecked{}};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatElem::Unchecked{}};
}

RatElem operator-(const RatElem& a, const RatElem& b) { return a + (-b); }

RatElem operator*(const RatElem& a, const RatElem& b) {
    if (a.is_zero() || b.is_zero()) return RatElem(0);
    return {a.num_ * b.num_, a.den_ * b.den_, RatElem::Unchecked{}};
}

bool operator==(const RatElem& a, const RatElem& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

// ------------------------------------------------------------ substitution

namespace {

struct VarImage {
    ExtElem num;
    ExtElem den;
    std::vector<ExtElem> num_pows;
    std::vector<ExtElem> den_pows;

    void ensure(unsigned degree) {
        if (num_pows.empty()) {
            num_pows.emplace_back(1);
            den_pows.emplace_back(1);
        }
        while (num_pows.size() <= degree) {
            num_pows.push_back(num_pows.back() * num);
            den_pows.push_back(den_pows.back() * den);
        }
    }
};

using Images = std::array<std::optional<VarImage>, kNumVars>;

// Clears denominators with prod_v den_v^maxdeg_v so that every term image is a ring element.
RatElem substitute_poly(const Polynomial& p, Images& images) {
    std::array<unsigned, kNumVars> maxdeg{};
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (!images[i]) continue;
        maxdeg[i] = p.max_degree(static_cast<Var>(i));
        images[i]->ensure(maxdeg[i]);
    }
    ExtElem num;
    for (const auto& [m, c] : p.terms()) {
        Monomial kept;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (!images[i]) kept.exps[i] = m.exps[i];
        }
        ExtElem term(Polynomial(kept, c));
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (!images[i]) continue;
            const unsigned e = m.exps[i];
            term = term * images[i]->num_pows[e] * images[i]->den_pows[maxdeg[i] - e];
        }
        num += term;
    }
    ExtElem den(1);
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (images[i]) den = den * images[i]->den_pows[maxdeg[i]];
    }
    return {std::move(num), std::move(den)};
}

RatElem substitute_ext(const ExtElem& e, Images& images, const RatElem& r_image) {
    RatElem out = substitute_poly(e.rational_part(), images);
    if (!e.root_part().is_zero()) out += substitute_poly(e.root_part(), images) * r_image;
    return out;
}

}  // namespace

RatElem substitute(const RatElem& e, const Assignment& assignment, const RatElem& r_image) {
    Images images;
    for (const auto& [v, value] : assignment) {
        images[static_cast<std::size_t>(v)] = VarImage{value.num(), value.den(), {}, {}};
    }
    const RatElem delta_image = substitute_poly(delta(), images);
    if (!(r_image * r_image == delta_image)) {
        throw InconsistentRootImage("r image squared is " + (r_image * r_image).to_string() +
                                    ", expected " + delta_image.to_string());
    }
    const RatElem num = substitute_ext(e.num(), images, r_image);
    const RatElem den = substitute_ext(e.den(), images, r_image);
    if (den.is_zero()) throw DenominatorVanishes("denominator maps to zero under substitution");
    return num / den;
}

Complex eval_numeric(const RatElem& e, const VarValues& at, Complex r_value, double tol) {
    const Complex d = delta().eval(at);
    if (!approx_eq_rel(r_value * r_value, d, kVerdictTolerance)) {
        throw InconsistentRootImage("r value does not square to x1*x2*y1*y2*z1*z2");
    }
    const Complex den = e.den().eval(at, r_value);
    if (std::abs(den) <= tol * e.den().eval_abs(at, r_value)) {
        throw DenominatorVanishes("denominator vanishes at the evaluation point");
    }
    return e.num().eval(at, r_value) / den;
}

}  // namespace g7hecke
