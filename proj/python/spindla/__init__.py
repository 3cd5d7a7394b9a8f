# Copyright 2026 The spindla authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Dynamical Lie algebras of centrally coupled spin networks."""

import json

from spindla._core import (
    OperatorParseError,
    ValidationError,
    analyze_json,
    closure_dim,
    collective_algebra_dim,
    commutant_dim,
    dims_table,
    dla_dim,
    max_qubits,
    run_checks,
)

__version__ = "0.1.0"

__all__ = [
    "OperatorParseError",
    "ValidationError",
    "analyze",
    "analyze_json",
    "closure_dim",
    "collective_algebra_dim",
    "commutant_dim",
    "dims_table",
    "dla_dim",
    "max_qubits",
    "run_checks",
]


def analyze(nc, np, gamma_c=1.0, gamma_p=2.0, seed=42):
    """Controllability report as a dict (see analyze_json for the schema)."""
    return json.loads(analyze_json(nc, np, gamma_c, gamma_p, seed))
