// Copyright 2026 The edgeswap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "edgeswap/graph.hpp"
#include "edgeswap/rng.hpp"
#include "edgeswap/tree.hpp"

namespace edgeswap {

// Reference samplers. All return a canonical (sorted) spanning tree.

/// Random walk from a uniform start vertex; each vertex keeps the edge it was
/// first entered by. Uniform over spanning trees.
TreeKey aldous_broder(const Graph& g, DrawSource& draws);

/// Loop-erased random walks toward a uniform root, started from each
/// unvisited vertex in index order. Uniform over spanning trees.
TreeKey wilson(const Graph& g, DrawSource& draws);

/// Kruskal over a uniform (Fisher-Yates) permutation of the edges.
/// Always a spanning tree, but NOT uniform: on K_4 each star has mass 1/15.
TreeKey biased_union_find(const Graph& g, DrawSource& draws);

}  // namespace edgeswap
