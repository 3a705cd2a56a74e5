# Copyright 2026 The clusterproof Authors
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

"""Graph-state self-testing and verified measurement-based computation."""

import json as _json

from . import _core
from ._core import (
    CapacityExceeded,
    DomainError,
    Error,
    Graph,
    ImaginaryResidue,
    InvalidArgument,
    JunkDegenerate,
    MissingParameter,
    NormUnderflow,
    NotATriangle,
    UncoverableVertex,
    acceptance_criterion,
    acceptance_criterion_count,
    bound,
    choose_q,
    complete_graph,
    graph_from_spec,
    graph_state,
    hoeffding_repetitions,
    local_complement,
    triangle_cover,
    triangle_strip,
    triangular_lattice,
)

__all__ = [
    "CapacityExceeded",
    "DomainError",
    "Error",
    "Graph",
    "ImaginaryResidue",
    "InvalidArgument",
    "JunkDegenerate",
    "MissingParameter",
    "NormUnderflow",
    "NotATriangle",
    "UncoverableVertex",
    "acceptance_criterion",
    "acceptance_criterion_count",
    "bound",
    "c_test",
    "choose_q",
    "complete_graph",
    "exact_pass_probability",
    "graph_from_spec",
    "graph_state",
    "hoeffding_repetitions",
    "local_complement",
    "pattern_distribution",
    "reference_distribution",
    "run_experiment",
    "triangle_cover",
    "triangle_strip",
    "triangular_lattice",
]


def _dumps(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def _graph(g):
    return graph_from_spec(g) if isinstance(g, str) else g


def c_test(graph, theta):
    """Honest one-shot pass probability for a graph (or graph spec string)."""
    return _core.c_test(_graph(graph), list(theta))


def exact_pass_probability(graph, theta, strategy=None):
    """Exact one-shot pass probability; `strategy` defaults to honest."""
    return _core.exact_pass_probability(_graph(graph), list(theta), _dumps(strategy or {"kind": "honest"}))


def pattern_distribution(graph, theta, pattern, strategy=None):
    """(P(output = 0), P(output = 1)) for the pattern run against provers."""
    return tuple(
        _core.pattern_distribution(_graph(graph), list(theta), _dumps(strategy or {"kind": "honest"}), _dumps(pattern))
    )


def reference_distribution(graph, pattern):
    """Output distribution of the ideal pattern on |G>."""
    return tuple(_core.reference_distribution(_graph(graph), _dumps(pattern)))


def run_experiment(config, jobs=1):
    """Runs an experiment config (dict or JSON text).

    Returns (rows, footer) where footer holds summary, config and digest.
    """
    lines = _core.run_experiment(_dumps(config), jobs).splitlines()
    records = [_json.loads(line) for line in lines]
    return records[:-1], records[-1]
