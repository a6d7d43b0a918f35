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

// Python entry points. Structured results cross the boundary as JSON text in
// the same schema the CLI emits; the package wrapper decodes them.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "g7hecke/errors.hpp"
#include "g7hecke/identities.hpp"
#include "g7hecke/irreducibility.hpp"
#include "g7hecke/json_io.hpp"
#include "g7hecke/sweep.hpp"

namespace py = pybind11;
using namespace g7hecke;

namespace {

RootSign sign_from_int(int s) {
    if (s == 1) return RootSign::plus;
    if (s == -1) return RootSign::minus;
    throw ParseError("r_sign must be +1 or -1");
}

ForceRegime force_from_string(const std::string& s) {
    if (s == "auto") return ForceRegime::automatic;
    if (s == "equal") return ForceRegime::equal;
    if (s == "distinct") return ForceRegime::distinct;
    throw ParseError("force_regime must be equal, distinct or auto");
}

std::string check(const std::string& params, int r_sign, double tolerance, const std::string& force_regime) {
    const Params p = params_from_text(params);
    const Verdict v = decide(p, {tolerance, sign_from_int(r_sign), force_from_string(force_regime)});
    return verdict_to_json(p, v, tolerance).dump();
}

std::string relations(const std::string& params, int r_sign, double tolerance, const std::string& force_regime) {
    const Params p = params_from_text(params);
    const Regime rg = resolve_regime(p, force_from_string(force_regime), tolerance);
    return relations_to_json(p, build_for_regime(p, rg, sign_from_int(r_sign))).dump();
}

std::string identities(const std::optional<std::string>& only) {
    return identities_to_json(run_identity_suite(only ? std::optional<std::string_view>(*only) : std::nullopt)).dump();
}

std::string sweep(std::uint64_t samples, std::uint64_t seed, const std::string& domain, double inject_rate,
                  double log10_min, double log10_max, const std::string& regime, int r_sign, double tolerance,
                  unsigned threads) {
    SweepConfig cfg;
    cfg.samples = samples;
    cfg.seed = seed;
    const auto d = parse_domain(domain);
    if (!d) throw ParseError("domain must be positive-real, unit-modulus or general-complex");
    const auto r = parse_regime_filter(regime);
    if (!r) throw ParseError("regime must be both, equal or distinct");
    cfg.domain = *d;
    cfg.regime = *r;
    cfg.inject_rate = inject_rate;
    cfg.log10_min = log10_min;
    cfg.log10_max = log10_max;
    cfg.r_sign = sign_from_int(r_sign);
    cfg.tolerance = tolerance;
    cfg.threads = threads;
    cfg.validate();
    py::gil_scoped_release release;
    return sweep_to_json(run_sweep(cfg)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Native core of g7hecke";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InvalidParams>(m, "InvalidParams", PyExc_ValueError);

    m.attr("schema_version") = kSchemaVersion;
    m.def("principal_sqrt", &principal_sqrt, py::arg("z"));
    m.def("check", &check, py::arg("params"), py::arg("r_sign") = 1, py::arg("tolerance") = kVerdictTolerance,
          py::arg("force_regime") = "auto");
    m.def("relations", &relations, py::arg("params"), py::arg("r_sign") = 1,
          py::arg("tolerance") = kVerdictTolerance, py::arg("force_regime") = "auto");
    m.def("identities", &identities, py::arg("only") = std::nullopt);
    m.def("identity_names", &identity_names);
    m.def("sweep", &sweep, py::arg("samples") = 10'000, py::arg("seed") = 42, py::arg("domain") = "positive-real",
          py::arg("inject_rate") = 0.1, py::arg("log10_min") = -1.0, py::arg("log10_max") = 1.0,
          py::arg("regime") = "both", py::arg("r_sign") = 1, py::arg("tolerance") = kVerdictTolerance,
          py::arg("threads") = 0);
}
