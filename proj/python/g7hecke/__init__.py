# Copyright 2026 The g7hecke Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Irreducibility checks for the two-dimensional representation of the G7 Hecke algebra.

Parameters are given as a mapping with keys x1, x2, y1, y2, z1, z2 (and
optionally y3, z3). Values may be Python numbers, complex numbers, or the
JSON objects {"re", "im"} / {"modulus", "argument"}. Results are the decoded
JSON documents also produced by the command-line tool.
"""

import json
from typing import Any, Mapping, Optional

from . import _core
from ._core import Error, InvalidParams, ParseError, principal_sqrt

__all__ = [
    "Error",
    "InvalidParams",
    "ParseError",
    "SCHEMA_VERSION",
    "check",
    "generators",
    "identities",
    "identity_names",
    "principal_sqrt",
    "relations",
    "sweep",
    "to_complex",
]

SCHEMA_VERSION = _core.schema_version


def _encode_value(v: Any) -> Any:
    if isinstance(v, Mapping):
        return dict(v)
    z = complex(v)
    return {"re": z.real, "im": z.imag}


def _encode_params(params: Mapping[str, Any]) -> str:
    return json.dumps({k: _encode_value(v) for k, v in params.items()})


def to_complex(obj: Mapping[str, float]) -> complex:
    return complex(obj["re"], obj["im"])


def check(params: Mapping[str, Any], r_sign: int = 1, tolerance: float = 1e-9, force_regime: str = "auto") -> dict:
    return json.loads(_core.check(_encode_params(params), r_sign, tolerance, force_regime))


def relations(params: Mapping[str, Any], r_sign: int = 1, tolerance: float = 1e-9, force_regime: str = "auto") -> dict:
    return json.loads(_core.relations(_encode_params(params), r_sign, tolerance, force_regime))


def generators(params: Mapping[str, Any], r_sign: int = 1, force_regime: str = "auto") -> dict:
    """s1, s2, s3 as 2x2 nested lists of complex numbers, plus the root used."""
    doc = relations(params, r_sign=r_sign, force_regime=force_regime)
    out = {}
    for name, rows in doc["generators"].items():
        out[name] = [[to_complex(e) for e in row] for row in rows]
    out["r"] = to_complex(doc["r_used"])
    return out


def identities(only: Optional[str] = None) -> dict:
    return json.loads(_core.identities(only))


def identity_names() -> list:
    return list(_core.identity_names())


def sweep(
    samples: int = 10_000,
    seed: int = 42,
    domain: str = "positive-real",
    inject_rate: float = 0.1,
    log10_min: float = -1.0,
    log10_max: float = 1.0,
    regime: str = "both",
    r_sign: int = 1,
    tolerance: float = 1e-9,
    threads: int = 0,
) -> dict:
    return json.loads(
        _core.sweep(samples, seed, domain, inject_rate, log10_min, log10_max, regime, r_sign, tolerance, threads)
    )
