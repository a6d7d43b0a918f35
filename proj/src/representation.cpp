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

#include "g7hecke/representation.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "g7hecke/errors.hpp"

namespace g7hecke {

namespace {

void require_nonzero(Complex v, const char* name) {
    if (!is_finite(v)) throw InvalidParams(std::string("parameter ") + name + " is not finite");
    if (std::abs(v) == 0.0) throw InvalidParams(std::string("parameter ") + name + " must be nonzero");
}

GeneratorTriple assemble(Complex x1, Complex x2, const Params& p, Complex r, RootSign sign) {
    const Complex y_sum = p.y1 + p.y2, y_prod = p.y1 * p.y2;
    const Complex z_sum = p.z1 + p.z2;
    GeneratorTriple g;
    g.s1 = {x1, y_sum / y_prod - z_sum * x2 / r, 0.0, x2};
    g.s2 = {y_sum, 1.0 / x1, -y_prod * x1, 0.0};
    g.s3 = {0.0, -r / (y_prod * x1 * x2), r, z_sum};
    g.r_used = r;
    g.r_sign = sign;
    return g;
}

// Residual of prod_i (s - roots_i) relative to prod_i (|s| + |roots_i|).
template <std::size_t N>
double relation_residual(const Mat2& s, const std::array<Complex, N>& roots) {
    Mat2 acc = Mat2::identity();
    double scale = 1.0;
    for (Complex root : roots) {
        acc = acc * (s - Mat2::scalar(root));
        scale *= s.max_abs() + std::abs(root);
    }
    return acc.max_abs() / scale;
}

}  // namespace

void Params::validate() const {
    require_nonzero(x1, "x1");
    require_nonzero(x2, "x2");
    require_nonzero(y1, "y1");
    require_nonzero(y2, "y2");
    require_nonzero(z1, "z1");
    require_nonzero(z2, "z2");
    if (y3) require_nonzero(*y3, "y3");
    if (z3) require_nonzero(*z3, "z3");
}

Params Params::scaled(Complex lambda) const {
    return {lambda * x1, lambda * x2, lambda * y1, lambda * y2, lambda * z1, lambda * z2, {}, {}};
}

Complex root_value(const Params& p, RootSign sign) { return as_factor(sign) * principal_sqrt(p.delta()); }

GeneratorTriple build_general(const Params& p, RootSign sign) {
    p.validate();
    return assemble(p.x1, p.x2, p, root_value(p, sign), sign);
}

GeneratorTriple build_equal_x(const Params& p, RootSign sign) {
    p.validate();
    const Complex r = as_factor(sign) * principal_sqrt(p.x2 * p.x2 * p.y1 * p.y2 * p.z1 * p.z2);
    return assemble(p.x2, p.x2, p, r, sign);
}

double braid_residual(const GeneratorTriple& g) {
    const Mat2 p123 = g.s1 * g.s2 * g.s3;
    const Mat2 p231 = g.s2 * g.s3 * g.s1;
    const Mat2 p312 = g.s3 * g.s1 * g.s2;
    const double diff = std::max((p123 - p231).max_abs(), (p123 - p312).max_abs());
    const double scale = p123.max_abs();
    return scale > 0.0 ? diff / scale : diff;
}

double HeckeResiduals::max() const {
    double m = std::max({s1, s2, s3});
    if (s2_cubic) m = std::max(m, *s2_cubic);
    if (s3_cubic) m = std::max(m, *s3_cubic);
    return m;
}

HeckeResiduals hecke_residuals(const GeneratorTriple& g, const Params& p) {
    HeckeResiduals out;
    out.s1 = relation_residual<2>(g.s1, {p.x1, p.x2});
    out.s2 = relation_residual<2>(g.s2, {p.y1, p.y2});
    out.s3 = relation_residual<2>(g.s3, {p.z1, p.z2});
    if (p.y3) out.s2_cubic = relation_residual<3>(g.s2, {p.y1, p.y2, *p.y3});
    if (p.z3) out.s3_cubic = relation_residual<3>(g.s3, {p.z1, p.z2, *p.z3});
    return out;
}

Mat2 conjugator_T(const Params& p, const GeneratorTriple& g, double tol) {
    if (approx_eq(p.x1, p.x2, tol)) throw DegenerateRegime("conjugator requires x1 != x2");
    if (std::abs(g.s1.b) <= tol * g.s1.max_abs()) throw DegenerateRegime("conjugator requires s1(1,2) != 0");
    return {1.0, g.s1.b / (p.x2 - p.x1), 0.0, 1.0};
}

}  // namespace g7hecke
