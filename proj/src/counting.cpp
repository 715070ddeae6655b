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

#include "edgeswap/counting.hpp"

#include "edgeswap/error.hpp"

namespace edgeswap {

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt kirchhoff_count(Vertex vertex_count, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (vertex_count < 1) return 0;
  const auto n = static_cast<std::size_t>(vertex_count - 1);
  // Reduced Laplacian: rows/cols for vertices 1..V-1.
  std::vector<std::vector<BigInt>> lap(n, std::vector<BigInt>(n, 0));
  for (auto [u, v] : edges) {
    if (u > 0) lap[u - 1][u - 1] += 1;
    if (v > 0) lap[v - 1][v - 1] += 1;
    if (u > 0 && v > 0) {
      lap[u - 1][v - 1] -= 1;
      lap[v - 1][u - 1] -= 1;
    }
  }
  return bareiss_determinant(std::move(lap));
}

BigInt kirchhoff_count(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g.edges().size());
  for (auto e : g.edges()) edges.emplace_back(e.u, e.v);
  return kirchhoff_count(g.vertex_count(), edges);
}

namespace {

// Backtracking over ascending edge subsets; a branch dies as soon as an edge
// would close a cycle, so only forests are ever visited.
struct Enumerator {
  const Graph& g;
  std::size_t need;
  DisjointSets sets;
  TreeKey current;
  std::vector<TreeKey> out;

  void run(EdgeId next) {
    if (current.size() == need) {
      out.push_back(current);
      return;
    }
    const auto remaining = static_cast<std::size_t>(g.edge_count() - next);
    if (remaining < need - current.size()) return;
    for (EdgeId e = next; e < g.edge_count(); ++e) {
      if (static_cast<std::size_t>(g.edge_count() - e) < need - current.size()) break;
      if (!sets.unite(g.edge(e).u, g.edge(e).v)) continue;
      current.push_back(e);
      run(e + 1);
      current.pop_back();
      sets.rollback();
    }
  }
};

}  // namespace

std::vector<TreeKey> enumerate_spanning_trees(const Graph& g, std::uint64_t budget) {
  BigInt subsets;
  mpz_bin_uiui(subsets.get_mpz_t(), static_cast<unsigned long>(g.edge_count()),
               static_cast<unsigned long>(g.vertex_count() - 1));
  if (subsets > BigInt(std::to_string(budget)))
    throw TooLarge("C(" + std::to_string(g.edge_count()) + "," + std::to_string(g.vertex_count() - 1) +
                   ") = " + subsets.get_str() + " subsets exceeds enumeration budget " +
                   std::to_string(budget));
  Enumerator en{g, static_cast<std::size_t>(g.vertex_count() - 1),
                DisjointSets(static_cast<std::size_t>(g.vertex_count())), {}, {}};
  en.run(0);
  return std::move(en.out);
}

}  // namespace edgeswap
