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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "edgeswap/counting.hpp"
#include "edgeswap/error.hpp"
#include "oracles.hpp"

using namespace edgeswap;

namespace {

// Every (V-1)-subset checked by BFS connectivity, with no shared code.
std::vector<TreeKey> brute_force(const Graph& g) {
  const int E = g.edge_count(), k = g.vertex_count() - 1;
  std::vector<TreeKey> out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    oracle::NaiveForest f(g.vertex_count());
    bool ok = true;
    for (int e : pick) {
      if (f.connected(g.edge(e).u, g.edge(e).v)) {
        ok = false;
        break;
      }
      f.link(g.edge(e).u, g.edge(e).v);
    }
    if (ok) out.emplace_back(pick.begin(), pick.end());
    int i = k - 1;
    while (i >= 0 && pick[i] == E - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("Cayley's formula") {
  for (int n = 3; n <= 9; ++n) {
    BigInt expect;
    mpz_ui_pow_ui(expect.get_mpz_t(), n, n - 2);
    CHECK(kirchhoff_count(generate(TopologySpec::complete(n))) == expect);
  }
  BigInt big;
  mpz_ui_pow_ui(big.get_mpz_t(), 30, 28);
  CHECK(kirchhoff_count(generate(TopologySpec::complete(30))) == big);
}

TEST_CASE("small closed forms") {
  for (int n = 3; n <= 20; ++n) CHECK(kirchhoff_count(generate(TopologySpec::cycle(n))) == n);
  CHECK(kirchhoff_count(generate(TopologySpec::complete(4))) == 16);
  // Ladder counts follow t(n) = 4 t(n-1) - t(n-2) with t(1) = 1, t(2) = 4.
  long a = 1, b = 4;
  for (int n = 2; n <= 12; ++n) {
    CHECK(kirchhoff_count(generate(TopologySpec::ladder(n))) == b);
    long c = 4 * b - a;
    a = b;
    b = c;
  }
  CHECK(kirchhoff_count(oracle::theta_graph({2, 3, 2})) == 16);
}

TEST_CASE("disconnected edge sets count zero") {
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {2, 3}};
  CHECK(kirchhoff_count(4, edges) == 0);
  std::vector<std::pair<Vertex, Vertex>> none;
  CHECK(kirchhoff_count(1, none) == 1);
}

TEST_CASE("Bareiss determinant") {
  CHECK(bareiss_determinant({{BigInt(2), BigInt(1)}, {BigInt(1), BigInt(3)}}) == 5);
  CHECK(bareiss_determinant({{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}) == -1);
  CHECK(bareiss_determinant({{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}}) == 0);
  CHECK(bareiss_determinant({{BigInt(2), BigInt(0), BigInt(1)},
                             {BigInt(1), BigInt(3), BigInt(2)},
                             {BigInt(1), BigInt(1), BigInt(2)}}) == 6);
}

TEST_CASE("triangle enumeration") {
  Graph g = parse_edge_list("p 3 3\n0 1\n1 2\n0 2\n");
  std::vector<TreeKey> expect{{0, 1}, {0, 2}, {1, 2}};
  CHECK(enumerate_spanning_trees(g) == expect);
}

TEST_CASE("enumeration matches brute force and the determinant") {
  std::vector<TopologySpec> specs = {TopologySpec::cycle(6),      TopologySpec::ladder(3),
                                     TopologySpec::ladder(4),     TopologySpec::complete(4),
                                     TopologySpec::complete(5),   TopologySpec::bi_complete(3),
                                     TopologySpec::bi_complete(4), TopologySpec::torus(3, 3),
                                     TopologySpec::dmp(0.5, 4),   TopologySpec::dmp(1.0, 3)};
  for (const auto& s : specs) {
    CAPTURE(graph_id(s));
    Graph g = generate(s, 4);
    if (g.vertex_count() > 9) continue;
    auto trees = enumerate_spanning_trees(g);
    CHECK(trees == brute_force(g));
    CHECK(kirchhoff_count(g) == static_cast<unsigned long>(trees.size()));
  }
  Graph t33 = generate(TopologySpec::torus(3, 3));
  CHECK(kirchhoff_count(t33) == static_cast<unsigned long>(enumerate_spanning_trees(t33).size()));
}

TEST_CASE("enumeration output is canonical") {
  Graph g = generate(TopologySpec::ladder(5));
  auto trees = enumerate_spanning_trees(g);
  CHECK(std::is_sorted(trees.begin(), trees.end()));
  CHECK(std::set<TreeKey>(trees.begin(), trees.end()).size() == trees.size());
  for (const auto& t : trees) {
    CHECK(std::is_sorted(t.begin(), t.end()));
    CHECK(is_spanning_tree(g, t));
  }
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(enumerate_spanning_trees(generate(TopologySpec::complete(12))), TooLarge);
  CHECK_THROWS_AS(enumerate_spanning_trees(generate(TopologySpec::complete(5)), 100), TooLarge);
  CHECK_NOTHROW(enumerate_spanning_trees(generate(TopologySpec::complete(5)), 252));
}
