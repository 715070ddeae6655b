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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "edgeswap/graph.hpp"
#include "edgeswap/rng.hpp"
#include "edgeswap/tree.hpp"

namespace edgeswap {

/// Number of spanning trees (matrix-tree theorem): determinant of the
/// Laplacian with vertex 0's row and column removed, by Bareiss
/// fraction-free elimination over big integers.
BigInt kirchhoff_count(const Graph& g);

/// Same, for an arbitrary simple edge list; returns 0 when disconnected.
BigInt kirchhoff_count(Vertex vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);

/// Exact determinant of a square integer matrix (row-major), fraction-free.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Every spanning tree of g in ascending lexicographic key order.
/// Throws TooLarge when C(E, V-1) exceeds `budget`.
std::vector<TreeKey> enumerate_spanning_trees(const Graph& g,
                                              std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace edgeswap
