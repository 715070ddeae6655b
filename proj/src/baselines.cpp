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

#include "edgeswap/baselines.hpp"

#include <algorithm>
#include <numeric>

namespace edgeswap {

namespace {

Incidence random_neighbor(const Graph& g, Vertex v, DrawSource& draws) {
  auto nbrs = g.neighbors(v);
  return nbrs[draws.uniform_index(nbrs.size())];
}

}  // namespace

TreeKey aldous_broder(const Graph& g, DrawSource& draws) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<char> seen(n, 0);
  TreeKey tree;
  tree.reserve(n - 1);
  auto v = static_cast<Vertex>(draws.uniform_index(n));
  seen[v] = 1;
  while (tree.size() + 1 < n) {
    Incidence step = random_neighbor(g, v, draws);
    v = step.neighbor;
    if (!seen[v]) {
      seen[v] = 1;
      tree.push_back(step.edge);
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

TreeKey wilson(const Graph& g, DrawSource& draws) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<char> in_tree(n, 0);
  std::vector<Incidence> next(n);
  TreeKey tree;
  tree.reserve(n - 1);
  in_tree[draws.uniform_index(n)] = 1;
  for (std::size_t start = 0; start < n; ++start) {
    // Overwriting next[] on revisits erases loops implicitly.
    for (auto v = static_cast<Vertex>(start); !in_tree[v]; v = next[v].neighbor)
      next[v] = random_neighbor(g, v, draws);
    for (auto v = static_cast<Vertex>(start); !in_tree[v]; v = next[v].neighbor) {
      in_tree[v] = 1;
      tree.push_back(next[v].edge);
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

TreeKey biased_union_find(const Graph& g, DrawSource& draws) {
  std::vector<EdgeId> order(static_cast<std::size_t>(g.edge_count()));
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[draws.uniform_index(i)]);
  DisjointSets sets(static_cast<std::size_t>(g.vertex_count()));
  TreeKey tree;
  for (EdgeId e : order)
    if (sets.unite(g.edge(e).u, g.edge(e).v)) tree.push_back(e);
  std::sort(tree.begin(), tree.end());
  return tree;
}

}  // namespace edgeswap
