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

#include "g7hecke/identities.hpp"

using namespace g7hecke;

namespace {

const IdentityCheck* find(const IdentityReport& r, std::string_view label) {
    for (const IdentityCheck& c : r.checks) {
        if (c.label == label) return &c;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("s1 off-diagonal factorization") {
    const IdentityReport r = verify_s1_offdiag_factorization();
    CHECK(r.status == IdentityStatus::verified);
}

TEST_CASE("w factorization") {
    const IdentityReport r = verify_w_factorization();
    CHECK(r.status == IdentityStatus::verified);
    for (const IdentityCheck& c : r.checks) CHECK_MESSAGE(c.holds, c.label);
}

TEST_CASE("braid and Hecke relations hold symbolically for both signs") {
    const IdentityReport r = verify_braid_and_hecke_symbolic();
    CHECK(r.status == IdentityStatus::verified);
    CHECK(r.checks.size() == 10);
}

TEST_CASE("a corrupted s1 fails the relation check") {
    SymTriple g = symbolic_generators(RootSign::plus);
    g.s1.b = g.s1.b + RatElem(1);
    const IdentityReport r = verify_braid_and_hecke(g, 1);
    CHECK(r.status == IdentityStatus::failed);
    bool some_residual = false;
    for (const IdentityCheck& c : r.checks) some_residual = some_residual || (!c.holds && !c.residual.empty());
    CHECK(some_residual);
}

TEST_CASE("conjugated generators") {
    const IdentityReport r = verify_conjugation_formulas();
    const auto holds = [&](std::string_view label) {
        const IdentityCheck* c = find(r, label);
        REQUIRE_MESSAGE(c != nullptr, label);
        return c->holds;
    };
    CHECK(holds("T^-1*s1*T = diag(x1, x2)"));
    CHECK(holds("T^-1*s2*T (1,1) = M"));
    CHECK(holds("T^-1*s2*T (2,1) = -x1*y1*y2"));
    CHECK(holds("T^-1*s3*T (1,1) = A"));
    CHECK(holds("T^-1*s3*T (1,2) = B"));
    CHECK(holds("T^-1*s3*T (2,1) = r"));
    CHECK(holds("T^-1*s3*T (2,2) = C"));
    CHECK(holds("trace(T^-1*s3*T) = z1 + z2"));
    // The displayed w and P entries do not match the computed conjugate.
    CHECK_FALSE(holds("T^-1*s2*T (1,2) = w"));
    CHECK_FALSE(holds("T^-1*s2*T (2,2) = P"));
    CHECK(holds("T^-1*s2*T (2,2) = -x1*(x2*y1*y2*(z1+z2) - (y1+y2)*r)/((x1-x2)*r)"));
    CHECK(r.status == IdentityStatus::failed);
}

TEST_CASE("B and w vanish under the plus root only") {
    for (const IdentityReport& r : {verify_b_vanishing(), verify_w_vanishing()}) {
        CHECK(r.status == IdentityStatus::sign_dependent);
        REQUIRE(r.checks.size() == 8);
        for (const IdentityCheck& c : r.checks) {
            REQUIRE(c.sign);
            CHECK_MESSAGE(c.holds == (*c.sign == 1), c.label);
        }
    }
}

TEST_CASE("equal-x invariant line") {
    const IdentityReport r = verify_equal_x_invariant_line();
    CHECK(r.status == IdentityStatus::verified);
}

TEST_CASE("suite registry") {
    const auto& names = identity_names();
    CHECK(names.size() == 7);
    const auto all = run_identity_suite();
    CHECK(all.size() == names.size());
    const auto one = run_identity_suite("w-factorization");
    REQUIRE(one.size() == 1);
    CHECK(one[0].name == "w-factorization");
    CHECK_THROWS_AS((void)run_identity_suite("no-such-report"), std::invalid_argument);
}

TEST_CASE("check_equal renders a residual on failure") {
    const IdentityCheck c = check_equal("x1 = x2", RatElem(Var::x1), RatElem(Var::x2));
    CHECK_FALSE(c.holds);
    CHECK(c.residual.find("x1") != std::string::npos);
}
