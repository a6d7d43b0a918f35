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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "g7hecke/identities.hpp"
#include "g7hecke/json_io.hpp"
#include "g7hecke/sweep.hpp"

using namespace g7hecke;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0 && secs >= limit_s) {
        o.ok = false;
        o.detail += " (over the " + std::to_string(limit_s) + " s limit)";
    }
    if (!o.ok) ++failures;
    std::printf("%s criterion %d: %s [%.3f s] %s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
    std::fflush(stdout);
}

std::string failed_labels(const IdentityReport& r, const std::function<bool(const IdentityCheck&)>& keep) {
    std::string out;
    for (const IdentityCheck& c : r.checks) {
        if (keep(c) && !c.holds) out += (out.empty() ? "" : "; ") + c.label;
    }
    return out;
}

SweepConfig sweep_config(Domain d) {
    SweepConfig cfg;
    cfg.samples = 10'000;
    cfg.seed = 42;
    cfg.domain = d;
    cfg.inject_rate = 0.1;
    return cfg;
}

std::string counts(const SweepSummary& s) {
    return "agree-irreducible=" + std::to_string(s.agree_irreducible) +
           " agree-reducible=" + std::to_string(s.agree_reducible) +
           " disagree-resolved-by-branch=" + std::to_string(s.disagree_resolved_by_branch) +
           " disagree-unresolved=" + std::to_string(s.disagree_unresolved) +
           " injected-equal=" + std::to_string(s.injected_equal) +
           " injected-distinct=" + std::to_string(s.injected_distinct);
}

}  // namespace

int main() {
    criterion(1, "w - alpha*beta reduces to zero", 1.0, [] {
        const bool ok = (sym::w() - sym::alpha() * sym::beta()).is_zero();
        return Outcome{ok, ok ? "exact zero" : "nonzero difference"};
    });

    criterion(2, "braid and quadratic relations exact for both root signs", 5.0, [] {
        const IdentityReport r = verify_braid_and_hecke_symbolic();
        std::set<int> signs;
        for (const IdentityCheck& c : r.checks) {
            if (c.sign) signs.insert(*c.sign);
        }
        const bool ok = r.status == IdentityStatus::verified && r.checks.size() == 10 && signs == std::set<int>{-1, 1};
        return Outcome{ok, std::to_string(r.checks.size()) + " checks " + std::string(to_string(r.status))};
    });

    criterion(3, "conjugated generators match every displayed entry", 5.0, [] {
        static const std::set<std::string> displayed{
            "T^-1*s1*T = diag(x1, x2)", "T^-1*s2*T (1,1) = M", "T^-1*s2*T (1,2) = w",
            "T^-1*s2*T (2,1) = -x1*y1*y2", "T^-1*s2*T (2,2) = P", "T^-1*s3*T (1,1) = A",
            "T^-1*s3*T (1,2) = B", "T^-1*s3*T (2,1) = r", "T^-1*s3*T (2,2) = C"};
        const IdentityReport r = verify_conjugation_formulas();
        std::size_t seen = 0;
        for (const IdentityCheck& c : r.checks) seen += displayed.count(c.label);
        const std::string bad = failed_labels(r, [](const IdentityCheck& c) { return displayed.count(c.label) > 0; });
        const bool ok = seen == displayed.size() && bad.empty();
        return Outcome{ok, ok ? "all displayed entries equal" : "mismatched: " + bad};
    });

    criterion(4, "B vanishes in each case for some root sign, case (i) at +1", 0.0, [] {
        const IdentityReport r = verify_b_vanishing();
        // Checks come in (+1, -1) pairs per case.
        bool ok = r.checks.size() == 8;
        std::string detail;
        for (std::size_t i = 0; ok && i < r.checks.size(); i += 2) {
            const bool plus = r.checks[i].holds, minus = r.checks[i + 1].holds;
            ok = ok && (plus || minus);
            detail += std::string(i ? ", " : "") + "case " + std::to_string(i / 2 + 1) + ": " +
                      (plus && minus ? "both" : plus ? "+1" : minus ? "-1" : "none");
        }
        ok = ok && r.checks[0].sign == 1 && r.checks[0].holds;
        return Outcome{ok, detail};
    });

    criterion(5, "equal-x eigenrelations exact", 0.0, [] {
        const IdentityReport r = verify_equal_x_invariant_line();
        const bool ok = r.status == IdentityStatus::verified;
        return Outcome{ok, ok ? std::to_string(r.checks.size()) + " checks verified"
                              : "failed: " + failed_labels(r, [](const IdentityCheck&) { return true; })};
    });

    SweepSummary positive, complex;
    criterion(6, "positive-real sweep agrees on 100% of samples", 10.0, [&] {
        positive = run_sweep(sweep_config(Domain::positive_real));
        const bool ok = positive.agree_irreducible + positive.agree_reducible == 10'000 &&
                        positive.injected_equal >= 500 && positive.injected_distinct >= 500;
        return Outcome{ok, counts(positive)};
    });

    criterion(7, "general-complex sweep has no unresolved disagreement", 0.0, [&] {
        complex = run_sweep(sweep_config(Domain::general_complex));
        return Outcome{complex.disagree_unresolved == 0, counts(complex)};
    });

    criterion(8, "reducible witnesses are invariant under all generators", 0.0, [&] {
        const std::uint64_t checks = positive.witness_checks + complex.witness_checks;
        const std::uint64_t bad = positive.witness_failures + complex.witness_failures;
        const std::uint64_t c1 = positive.equal_case1_checks + complex.equal_case1_checks;
        const std::uint64_t c1_bad = positive.equal_case1_mismatches + complex.equal_case1_mismatches;
        const bool ok = checks == positive.injected_equal + positive.injected_distinct + complex.injected_equal +
                                      complex.injected_distinct &&
                        bad == 0 && c1 > 0 && c1_bad == 0;
        return Outcome{ok, "witness checks=" + std::to_string(checks) + " failures=" + std::to_string(bad) +
                               " case-1 directions=" + std::to_string(c1) + " mismatches=" + std::to_string(c1_bad)};
    });

    criterion(9, "identical sweep configuration gives byte-identical JSON", 0.0, [] {
        const SweepConfig cfg = sweep_config(Domain::general_complex);
        const std::string a = sweep_to_json(run_sweep(cfg)).dump(2);
        const std::string b = sweep_to_json(run_sweep(cfg)).dump(2);
        return Outcome{a == b, std::to_string(a.size()) + " bytes"};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
