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
"""Uniform spanning tree sampling with the edge-swap chain."""

from fractions import Fraction

from ._edgeswap import (  # noqa: F401
    ContractError,
    Error,
    Graph,
    InvalidSpec,
    ParseError,
    Rng,
    TooLarge,
    __version__,
    aldous_broder,
    biased_union_find,
    bridged_cycles_bound,
    cycle_mixing_bound,
    edge_distance,
    enumerate_spanning_trees,
    exact_empirical_vd,
    generate,
    initial_tree,
    is_spanning_tree,
    parse_edge_list,
    path_coupling_estimate,
    run_cli,
    sample_tree,
    serialize_edge_list,
    wilson,
)
from . import _edgeswap


def kirchhoff_count(graph):
    """Number of spanning trees, as a Python int."""
    return int(_edgeswap.kirchhoff_count(graph))


def transition_matrix(graph, variant="slow"):
    """Exact one-step law as (states, rows); rows[i] maps j -> Fraction."""
    states, rows = _edgeswap.transition_matrix(graph, variant)
    return states, [{j: Fraction(int(n), int(d)) for j, n, d in row} for row in rows]


def bernoulli_params(cx, cy, ex, ey, i):
    """(p, p_star, p_prime) as Fractions."""
    return tuple(Fraction(int(n), int(d)) for n, d in _edgeswap.bernoulli_params(cx, cy, ex, ey, i))
