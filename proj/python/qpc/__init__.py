# Copyright 2026 The qpc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Pairwise-comparison structure of qubit state families.

Families are ``(N, 2)`` complex arrays of amplitudes ``(c0, c1)``.
"""

import json

from ._qpc import (
    DEFAULT_ZERO_TOL,
    REALIZE_TOL,
    PhaseMatrix,
    all_triangles,
    bargmann,
    bargmann_bloch,
    check_gram,
    check_matching,
    defect,
    factor_states,
    from_bloch,
    gram,
    is_coherent,
    orthogonality_edges,
    phase_residual,
    phases,
    probabilities,
    random_family,
    realize_coherent,
    realize_gram,
    realize_phases,
    run_verification,
    solid_angle,
    to_bloch,
    triangle_report,
)
from ._qpc import analyze_json as _analyze_json


def analyze(family, zero_tol=DEFAULT_ZERO_TOL):
    """Full comparison report of a family as a dict."""
    return json.loads(_analyze_json(family, zero_tol))


__all__ = [
    "DEFAULT_ZERO_TOL",
    "REALIZE_TOL",
    "PhaseMatrix",
    "all_triangles",
    "analyze",
    "bargmann",
    "bargmann_bloch",
    "check_gram",
    "check_matching",
    "defect",
    "factor_states",
    "from_bloch",
    "gram",
    "is_coherent",
    "orthogonality_edges",
    "phase_residual",
    "phases",
    "probabilities",
    "random_family",
    "realize_coherent",
    "realize_gram",
    "realize_phases",
    "run_verification",
    "solid_angle",
    "to_bloch",
    "triangle_report",
]
