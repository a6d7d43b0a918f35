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

#include "g7hecke/json_io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "g7hecke/errors.hpp"

namespace g7hecke {

namespace {

Json header(std::string_view kind) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind;
    return j;
}

double number_field(const Json& obj, const char* key, std::string_view field) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError("field '" + std::string(field) + "': missing '" + key + "'");
    if (!it->is_number()) throw ParseError("field '" + std::string(field) + "': '" + key + "' must be a number");
    return it->get<double>();
}

std::string format_complex(Complex z) {
    std::ostringstream os;
    os.precision(10);
    os << z.real() << (z.imag() < 0 || std::signbit(z.imag()) ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

Json conditions_to_json(const std::vector<ConditionFlag>& flags) {
    Json arr = Json::array();
    for (const ConditionFlag& f : flags) {
        Json c;
        c["case"] = to_string(f.which);
        c["equation"] = f.equation;
        c["lhs"] = to_json(f.lhs);
        c["rhs"] = to_json(f.rhs);
        c["holds"] = f.holds;
        arr.push_back(std::move(c));
    }
    return arr;
}

Json directions_to_json(const std::vector<Vec2>& dirs) {
    Json arr = Json::array();
    for (const Vec2& d : dirs) arr.push_back(to_json(d));
    return arr;
}

Json hecke_to_json(const HeckeResiduals& h) {
    Json j;
    j["s1_quadratic"] = h.s1;
    j["s2_quadratic"] = h.s2;
    j["s3_quadratic"] = h.s3;
    j["s2_cubic"] = h.s2_cubic ? Json(*h.s2_cubic) : Json(nullptr);
    j["s3_cubic"] = h.s3_cubic ? Json(*h.s3_cubic) : Json(nullptr);
    return j;
}

Json config_to_json(const SweepConfig& c) {
    Json j;
    j["samples"] = c.samples;
    j["seed"] = c.seed;
    j["domain"] = to_string(c.domain);
    j["log10_min"] = c.log10_min;
    j["log10_max"] = c.log10_max;
    j["tolerance"] = c.tolerance;
    j["inject_reducible_rate"] = c.inject_rate;
    j["regime"] = to_string(c.regime);
    j["r_sign"] = static_cast<int>(c.r_sign);
    return j;
}

}  // namespace

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const Vec2& v) { return Json::array({to_json(v.v1), to_json(v.v2)}); }

Json to_json(const Mat2& m) {
    return Json::array({Json::array({to_json(m.a), to_json(m.b)}), Json::array({to_json(m.c), to_json(m.d)})});
}

Json to_json(const Params& p) {
    Json j;
    j["x1"] = to_json(p.x1);
    j["x2"] = to_json(p.x2);
    j["y1"] = to_json(p.y1);
    j["y2"] = to_json(p.y2);
    j["z1"] = to_json(p.z1);
    j["z2"] = to_json(p.z2);
    if (p.y3) j["y3"] = to_json(*p.y3);
    if (p.z3) j["z3"] = to_json(*p.z3);
    return j;
}

Complex complex_from_json(const Json& j, std::string_view field) {
    if (!j.is_object()) throw ParseError("field '" + std::string(field) + "': expected an object");
    const bool cartesian = j.contains("re") || j.contains("im");
    const bool polar = j.contains("modulus") || j.contains("argument");
    if (cartesian && polar) {
        throw ParseError("field '" + std::string(field) + "': mixes {re, im} and {modulus, argument}");
    }
    if (polar) {
        const double modulus = number_field(j, "modulus", field);
        const double argument = number_field(j, "argument", field);
        if (modulus < 0.0) throw ParseError("field '" + std::string(field) + "': modulus must be non-negative");
        if (!(argument > -std::numbers::pi && argument <= std::numbers::pi)) {
            throw ParseError("field '" + std::string(field) + "': argument must lie in (-pi, pi]");
        }
        return from_polar({modulus, argument});
    }
    return {number_field(j, "re", field), number_field(j, "im", field)};
}

Params params_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("parameter document must be a JSON object");
    const auto required = [&](const char* key) {
        const auto it = j.find(key);
        if (it == j.end()) throw ParseError(std::string("field '") + key + "': missing");
        return complex_from_json(*it, key);
    };
    Params p{required("x1"), required("x2"), required("y1"), required("y2"), required("z1"), required("z2"), {}, {}};
    if (j.contains("y3")) p.y3 = complex_from_json(j.at("y3"), "y3");
    if (j.contains("z3")) p.z3 = complex_from_json(j.at("z3"), "z3");
    p.validate();
    return p;
}

Params params_from_text(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column));
    }
    return params_from_json(j);
}

Params load_params(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open parameter file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return params_from_text(buf.str());
}

Json verdict_to_json(const Params& p, const Verdict& v, double tolerance) {
    Json j = header("verdict");
    j["params"] = to_json(p);
    j["tolerance"] = tolerance;
    j["regime"] = to_string(v.regime);
    j["r_sign"] = static_cast<int>(v.r_sign);
    j["r_used"] = to_json(v.r_used);
    j["theorem_decision"] = to_string(v.theorem_decision);
    j["conditions"] = conditions_to_json(v.conditions);
    j["oracle_decision"] = to_string(v.oracle_decision);
    j["invariant_vector"] = v.invariant_vector ? to_json(*v.invariant_vector) : Json(nullptr);
    j["invariant_directions"] = directions_to_json(v.invariant_directions);
    j["agreement"] = v.agreement;
    j["residuals"] = Json{{"braid", v.braid_residual}, {"hecke", hecke_to_json(v.hecke)}};
    if (v.branch_diagnosis) {
        const BranchDiagnosis& b = *v.branch_diagnosis;
        Json d;
        d["applicable"] = b.applicable;
        d["flipped_r_sign"] = static_cast<int>(b.flipped_sign);
        d["flipped_r"] = to_json(b.flipped_r);
        d["flipped_oracle_decision"] = to_string(b.flipped_oracle_decision);
        d["flipped_directions"] = directions_to_json(b.flipped_directions);
        d["resolved"] = b.resolved;
        j["branch_diagnosis"] = std::move(d);
    } else {
        j["branch_diagnosis"] = Json{{"applicable", false}};
    }
    return j;
}

Json relations_to_json(const Params& p, const GeneratorTriple& g) {
    Json j = header("relations");
    j["params"] = to_json(p);
    j["r_sign"] = static_cast<int>(g.r_sign);
    j["r_used"] = to_json(g.r_used);
    j["generators"] = Json{{"s1", to_json(g.s1)}, {"s2", to_json(g.s2)}, {"s3", to_json(g.s3)}};
    j["braid"] = braid_residual(g);
    j["hecke"] = hecke_to_json(hecke_residuals(g, p));
    return j;
}

Json report_to_json(const IdentityReport& r) {
    Json j;
    j["name"] = r.name;
    j["status"] = to_string(r.status);
    Json checks = Json::array();
    for (const IdentityCheck& c : r.checks) {
        Json cj;
        cj["label"] = c.label;
        cj["sign"] = c.sign ? Json(*c.sign) : Json(nullptr);
        cj["holds"] = c.holds;
        cj["residual"] = c.holds ? Json(nullptr) : Json(c.residual);
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["notes"] = r.notes;
    return j;
}

Json identities_to_json(const std::vector<IdentityReport>& reports) {
    Json j = header("identities");
    Json arr = Json::array();
    for (const IdentityReport& r : reports) arr.push_back(report_to_json(r));
    j["reports"] = std::move(arr);
    return j;
}

Json outcome_to_json(const SampleOutcome& o) {
    Json j;
    j["index"] = o.index;
    j["regime"] = to_string(o.regime);
    j["injected"] = o.injected ? Json(to_string(*o.injected)) : Json(nullptr);
    j["params"] = to_json(o.params);
    j["theorem_decision"] = to_string(o.theorem);
    j["oracle_decision"] = to_string(o.oracle);
    j["resolved_by_branch"] = o.resolved_by_branch;
    return j;
}

Json sweep_to_json(const SweepSummary& s) {
    Json j = header("sweep");
    j["config"] = config_to_json(s.config);
    j["counts"] = Json{{"agree_irreducible", s.agree_irreducible},
                       {"agree_reducible", s.agree_reducible},
                       {"disagree_resolved_by_branch", s.disagree_resolved_by_branch},
                       {"disagree_unresolved", s.disagree_unresolved}};
    j["injected"] = Json{{"equal_x", s.injected_equal}, {"distinct_x", s.injected_distinct}};
    j["witness"] = Json{{"checked", s.witness_checks},
                        {"failures", s.witness_failures},
                        {"equal_case1_checked", s.equal_case1_checks},
                        {"equal_case1_mismatches", s.equal_case1_mismatches}};
    j["max_residuals"] = Json{{"braid", s.max_braid_residual}, {"hecke", s.max_hecke_residual}};
    Json dis = Json::array();
    for (const SampleOutcome& o : s.disagreements) dis.push_back(outcome_to_json(o));
    j["disagreements"] = std::move(dis);
    j["passed"] = s.passed();
    return j;
}

Json fixtures_to_json(const SweepSummary& s) {
    Json j = header("fixtures");
    j["config"] = config_to_json(s.config);
    Json arr = Json::array();
    for (const SampleOutcome& o : s.disagreements) {
        Json f = outcome_to_json(o);
        f["status"] = o.resolved_by_branch ? "resolved-by-branch" : "unresolved";
        arr.push_back(std::move(f));
    }
    j["fixtures"] = std::move(arr);
    return j;
}

std::string verdict_to_text(const Params& p, const Verdict& v) {
    std::ostringstream os;
    os << "parameters: x1=" << format_complex(p.x1) << ", x2=" << format_complex(p.x2) << ", y1=" << format_complex(p.y1)
       << ", y2=" << format_complex(p.y2) << ", z1=" << format_complex(p.z1) << ", z2=" << format_complex(p.z2) << '\n';
    os << "regime: " << to_string(v.regime) << ", r = " << format_complex(v.r_used) << " (sign "
       << static_cast<int>(v.r_sign) << ")\n";
    for (const ConditionFlag& f : v.conditions) {
        os << "  " << f.equation << ": " << format_complex(f.lhs) << " vs " << format_complex(f.rhs)
           << (f.holds ? "  [holds]" : "") << '\n';
    }
    os << "theorem: " << to_string(v.theorem_decision) << '\n';
    os << "oracle:  " << to_string(v.oracle_decision);
    if (v.invariant_vector) {
        os << ", invariant line (" << format_complex(v.invariant_vector->v1) << ", "
           << format_complex(v.invariant_vector->v2) << ")";
    }
    os << '\n';
    os << "agreement: " << (v.agreement ? "yes" : "no") << '\n';
    if (v.branch_diagnosis) {
        os << "flipped root: oracle " << to_string(v.branch_diagnosis->flipped_oracle_decision)
           << (v.branch_diagnosis->resolved ? " (resolves the disagreement)" : " (does not resolve)") << '\n';
    }
    os << "residuals: braid " << v.braid_residual << ", hecke " << v.hecke.max() << '\n';
    return os.str();
}

std::string relations_to_text(const GeneratorTriple& g, const Params& p) {
    const HeckeResiduals h = hecke_residuals(g, p);
    std::ostringstream os;
    os << "r = " << format_complex(g.r_used) << " (sign " << static_cast<int>(g.r_sign) << ")\n";
    os << "braid residual: " << braid_residual(g) << '\n';
    os << "hecke residuals: s1 " << h.s1 << ", s2 " << h.s2 << ", s3 " << h.s3;
    if (h.s2_cubic) os << ", s2 cubic " << *h.s2_cubic;
    if (h.s3_cubic) os << ", s3 cubic " << *h.s3_cubic;
    os << '\n';
    return os.str();
}

std::string identities_to_text(const std::vector<IdentityReport>& reports) {
    std::ostringstream os;
    for (const IdentityReport& r : reports) {
        os << r.name << ": " << to_string(r.status) << '\n';
        for (const IdentityCheck& c : r.checks) {
            os << "  [" << (c.holds ? "ok" : "FAIL") << "] " << c.label;
            if (c.sign) os << " (r sign " << (*c.sign > 0 ? "+1" : "-1") << ")";
            os << '\n';
        }
        for (const std::string& n : r.notes) os << "  note: " << n << '\n';
    }
    return os.str();
}

std::string sweep_to_text(const SweepSummary& s) {
    std::ostringstream os;
    os << "samples: " << s.config.samples << " (" << to_string(s.config.domain) << ", seed " << s.config.seed << ")\n";
    os << "agree irreducible: " << s.agree_irreducible << '\n';
    os << "agree reducible: " << s.agree_reducible << '\n';
    os << "disagree, resolved by flipping r: " << s.disagree_resolved_by_branch << '\n';
    os << "disagree, unresolved: " << s.disagree_unresolved << '\n';
    os << "injected: " << s.injected_equal << " equal_x, " << s.injected_distinct << " distinct_x\n";
    os << "witness failures: " << s.witness_failures << " of " << s.witness_checks << '\n';
    os << (s.passed() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

}  // namespace g7hecke
