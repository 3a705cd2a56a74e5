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

import math
import os
import pathlib

import pytest

import clusterproof as cp

DATA = pathlib.Path(os.environ.get("CLUSTERPROOF_DATA_DIR", pathlib.Path(__file__).parents[2] / "data"))

TRIANGLE_PATTERN = {
    "steps": [
        {"vertex": 0, "theta": math.pi / 4, "x_deps": [], "z_deps": []},
        {"vertex": 1, "theta": math.pi / 4, "x_deps": [0], "z_deps": []},
        {"vertex": 2, "theta": math.pi / 4, "x_deps": [1], "z_deps": [0]},
    ],
    "output_bits": [1, 2],
}


def test_lattice_shape():
    g = cp.triangular_lattice(3, 4)
    assert g.n == 12
    assert len(g.edges) == 23
    assert cp.triangle_cover(g)[0] == [0, 1, 4]
    assert cp.graph_from_spec("lattice:3x4") == g


def test_graph_state_amplitudes():
    g = cp.Graph(3, [(0, 1), (1, 2), (0, 2)])
    amps = cp.graph_state(g)
    for x, a in enumerate(amps):
        edges = sum(((x >> u) & 1) and ((x >> v) & 1) for u, v in g.edges)
        assert abs(a - (-1) ** edges / math.sqrt(8)) < 1e-14


def test_honest_rate():
    theta = [math.pi / 4] * 3
    expected = (7 + 3 / math.sqrt(2)) / 10
    assert cp.c_test("k3", theta) == pytest.approx(expected, abs=1e-15)
    assert cp.exact_pass_probability("k3", theta) == pytest.approx(expected, abs=1e-12)
    classical = {"kind": "classical", "table": [[1, 1, 1, 1]] * 3}
    assert cp.exact_pass_probability("k3", theta, classical) < expected


def test_pattern_matches_reference():
    theta = [math.pi / 4] * 3
    honest = cp.pattern_distribution("k3", theta, TRIANGLE_PATTERN)
    ref = cp.reference_distribution(cp.complete_graph(3), TRIANGLE_PATTERN)
    assert honest[1] == pytest.approx(ref[1], abs=1e-12)
    assert ref[1] == pytest.approx(0.6768, abs=5e-5)


def test_bounds():
    assert cp.hoeffding_repetitions(0.2) == 55
    assert cp.bound("repetitions", {"gap": 0.2})["value"] == 55
    assert cp.bound("thm2", {"n": 3, "edges": 3, "eps": 0.0}, {"p": "100"})["kind"] == "graph-test"
    q, gap = cp.choose_q(0.9, 0.8, 1 / 3, 1 / 6)
    assert q == pytest.approx(1 / 6)
    assert gap > 0


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        cp.bound("anticommute", {"eps": -1.0})
    with pytest.raises(KeyError):
        cp.bound("anticommute", {})
    with pytest.raises(cp.UncoverableVertex):
        cp.c_test(cp.Graph(3, [(0, 1), (1, 2)]), [0.1] * 3)
    with pytest.raises(ValueError):
        cp.run_experiment({"kind": "selftest", "trials": 10})


def test_experiment_is_reproducible():
    cfg = {"kind": "selftest", "trials": 2000, "seed": 7}
    rows, footer = cp.run_experiment(cfg)
    again, footer2 = cp.run_experiment(cfg, jobs=2)
    assert rows == again
    assert footer == footer2
    assert len(rows) == 2000
    rate = sum(r["accepted"] for r in rows) / len(rows)
    assert rate == footer["summary"]["rate"]


def test_protocol_config_file():
    import json

    cfg = json.loads((DATA / "config_protocol.json").read_text())
    cfg["pattern"] = str(DATA / "pattern_k3.json")
    cfg["trials"] = 2000
    _, footer = cp.run_experiment(cfg)
    assert footer["summary"]["calculation_labels_covered"] is True


def test_acceptance_criterion():
    assert cp.acceptance_criterion_count() == 13
    ok, name, detail = cp.acceptance_criterion(3)
    assert ok, detail
    assert name
