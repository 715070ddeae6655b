# Copyright 2026 The edgeswap Authors.
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
from collections import Counter
from fractions import Fraction

import networkx as nx
import pytest

import edgeswap as es


def test_generate_and_roundtrip():
    g = es.generate("ladder", n=7)
    assert (g.vertex_count, g.edge_count) == (14, 19)
    assert es.parse_edge_list(es.serialize_edge_list(g)) == g


def test_kirchhoff_matches_networkx():
    # Independent count via networkx's matrix-tree implementation.
    for g in (es.generate("torus", rows=3, cols=3), es.generate("biK", n=4), es.generate("ladder", n=6)):
        ref = nx.Graph(g.edges())
        assert es.kirchhoff_count(g) == round(nx.number_of_spanning_trees(ref))


def test_cayley_big_count():
    assert es.kirchhoff_count(es.generate("complete", n=30)) == 30**28


def test_samplers_emit_spanning_trees():
    g = es.generate("torus", rows=3, cols=4)
    rng = es.Rng(7)
    for tree in (
        es.sample_tree(g, 50, rng),
        es.sample_tree(g, 50, rng, "slow"),
        es.aldous_broder(g, rng),
        es.wilson(g, rng),
        es.biased_union_find(g, rng),
    ):
        assert es.is_spanning_tree(g, tree)


def test_k3_transition_matrix():
    states, rows = es.transition_matrix(es.generate("complete", n=3))
    assert len(states) == 3
    for i, row in enumerate(rows):
        assert row[i] == Fraction(2, 3)
        assert all(q == Fraction(1, 6) for j, q in row.items() if j != i)


def test_wilson_roughly_uniform_on_k4():
    g = es.generate("complete", n=4)
    rng = es.Rng(11)
    counts = Counter(tuple(es.wilson(g, rng)) for _ in range(16000))
    assert len(counts) == 16
    assert all(abs(c - 1000) < 5 * math.sqrt(1000) for c in counts.values())


def test_bounds_and_params():
    assert es.cycle_mixing_bound(5) == pytest.approx(1.0)
    assert es.bridged_cycles_bound(2, 3) == pytest.approx(math.log(8) / math.log(4 / 3))
    p, p_star, p_prime = es.bernoulli_params(5, 3, 3, 1, 2)
    assert (p_star, p_prime) == (Fraction(1, 2), Fraction(1))


def test_mixing_estimate_on_cycle():
    est = es.path_coupling_estimate(es.generate("cycle", n=101), seed=3, mode="non_markovian")
    assert est["tau_hat"] is not None and est["tau_hat"] > 0
    assert len(est["runs"]) == 4


def test_errors_are_typed():
    with pytest.raises(es.InvalidSpec):
        es.generate("cycle", n=2)
    with pytest.raises(es.ParseError):
        es.parse_edge_list("p 2 1\n0 0\n")


def test_cli_count():
    code, out, _ = es.run_cli(["count", "--topology", "complete", "--n", "4"])
    assert code == 0 and out.strip() == "16"
