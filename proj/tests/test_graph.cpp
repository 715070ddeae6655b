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

#include "edgeswap/error.hpp"
#include "edgeswap/graph.hpp"
#include "oracles.hpp"

using namespace edgeswap;

namespace {

// Structural checks written against the raw edge list, not Graph's own indices.
void check_invariants(const Graph& g) {
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    REQUIRE(u < v);
    REQUIRE(v < g.vertex_count());
    REQUIRE(seen.insert({u, v}).second);
    ++degree[u];
    ++degree[v];
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    REQUIRE(g.degree(v) == degree[v]);
    for (auto inc : g.neighbors(v)) {
      const Edge& e = g.edge(inc.edge);
      REQUIRE(((e.u == v && e.v == inc.neighbor) || (e.v == v && e.u == inc.neighbor)));
    }
  }
  REQUIRE(g.edge_count() >= g.vertex_count() - 1);
  oracle::NaiveForest f(g.vertex_count());
  for (auto e : g.edges()) f.link(e.u, e.v);  // a graph is fine here; only BFS is used
  for (Vertex v = 1; v < g.vertex_count(); ++v) REQUIRE(f.connected(0, v));
}

}  // namespace

TEST_CASE("small topologies have the expected sizes") {
  Graph c4 = generate(TopologySpec::cycle(4));
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

  Graph k4 = generate(TopologySpec::complete(4));
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);

  Graph l7 = generate(TopologySpec::ladder(7));
  CHECK(l7.vertex_count() == 14);
  CHECK(l7.edge_count() == 19);
}

TEST_CASE("closed-form edge counts") {
  for (int n = 3; n <= 12; ++n) {
    CHECK(generate(TopologySpec::complete(n)).edge_count() == n * (n - 1) / 2);
    Graph c = generate(TopologySpec::cycle(n));
    CHECK(c.edge_count() == n);
    CHECK(c.vertex_count() == n);
    Graph b = generate(TopologySpec::bi_complete(n));
    CHECK(b.vertex_count() == 2 * n);
    CHECK(b.edge_count() == n * (n - 1) + 2);
    CHECK(b.find_edge(0, n).has_value());
    CHECK(b.find_edge(1, n + 1).has_value());
  }
  for (int r = 3; r <= 6; ++r)
    for (int c = 3; c <= 6; ++c) CHECK(generate(TopologySpec::torus(r, c)).edge_count() == 2 * r * c);
  for (int n = 2; n <= 10; ++n) CHECK(generate(TopologySpec::ladder(n)).edge_count() == 3 * n - 2);
}

TEST_CASE("every generated graph passes the invariant checks") {
  std::vector<TopologySpec> specs = {TopologySpec::cycle(3),     TopologySpec::cycle(17),
                                     TopologySpec::ladder(2),    TopologySpec::ladder(9),
                                     TopologySpec::complete(3),  TopologySpec::complete(9),
                                     TopologySpec::bi_complete(3), TopologySpec::bi_complete(6),
                                     TopologySpec::torus(3, 3),  TopologySpec::torus(4, 7),
                                     TopologySpec::dmp(0.0, 10), TopologySpec::dmp(0.5, 30),
                                     TopologySpec::dmp(1.0, 12)};
  for (const auto& s : specs)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      CAPTURE(graph_id(s));
      check_invariants(generate(s, seed));
    }
}

TEST_CASE("generation is deterministic and only dmp reads the seed") {
  CHECK(generate(TopologySpec::torus(4, 5), 1) == generate(TopologySpec::torus(4, 5), 99));
  CHECK(generate(TopologySpec::dmp(0.5, 40), 7) == generate(TopologySpec::dmp(0.5, 40), 7));
  bool differs = false;
  for (std::uint64_t s = 1; s < 10 && !differs; ++s)
    differs = !(generate(TopologySpec::dmp(0.5, 40), 0) == generate(TopologySpec::dmp(0.5, 40), s));
  CHECK(differs);
}

TEST_CASE("dmp grows one vertex and at least one edge per step") {
  Graph base = generate(TopologySpec::cycle(5));
  auto base_spec = std::make_shared<TopologySpec>(TopologySpec::cycle(5));
  for (int t : {0, 1, 5, 25})
    for (double p : {0.0, 0.25, 1.0}) {
      Graph g = generate(TopologySpec::dmp(p, t, base_spec), 3);
      CHECK(g.vertex_count() == base.vertex_count() + t);
      CHECK(g.edge_count() >= base.edge_count() + t);
      if (p == 0.0) CHECK(g.edge_count() == base.edge_count() + t);
    }
  Graph tri = generate(TopologySpec::dmp(0.3, 0));
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);
}

TEST_CASE("parameters below the minimum are rejected") {
  CHECK_THROWS_AS(generate(TopologySpec::cycle(2)), InvalidSpec);
  CHECK_THROWS_AS(generate(TopologySpec::ladder(1)), InvalidSpec);
  CHECK_THROWS_AS(generate(TopologySpec::complete(2)), InvalidSpec);
  CHECK_THROWS_AS(generate(TopologySpec::bi_complete(2)), InvalidSpec);
  CHECK_THROWS_AS(generate(TopologySpec::torus(2, 3)), InvalidSpec);
  CHECK_THROWS_AS(generate(TopologySpec::dmp(1.5, 3)), InvalidSpec);
  CHECK_THROWS_AS(generate(TopologySpec::dmp(0.5, -1)), InvalidSpec);
  CHECK_THROWS_AS(parse_topology_kind("hypercube"), InvalidSpec);
  CHECK(parse_topology_kind("dense") == TopologyKind::complete);
  CHECK(parse_topology_kind("sparse") == TopologyKind::ladder);
}

TEST_CASE("Graph constructor validates its input") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}, {0, 1}, {1, 2}}), InvalidSpec);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}, {1, 2}}), InvalidSpec);
  CHECK_THROWS_AS(Graph(4, {{0, 1}, {2, 3}}), InvalidSpec);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 3}}), InvalidSpec);
  Graph g(3, {{2, 1}, {0, 1}});
  CHECK(g.edge(0) == Edge{1, 2});
  CHECK(g.find_edge(1, 2) == 0);
  CHECK(g.find_edge(2, 1) == 0);
  CHECK_FALSE(g.find_edge(0, 2).has_value());
}

TEST_CASE("edge-list text format") {
  Graph tri = parse_edge_list("p 3 3\n0 1\n1 2\n2 0\n");
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);
  CHECK(tri == generate(TopologySpec::cycle(3)));
  CHECK(parse_edge_list("p 3 3\n0 1\n0 2\n1 2\n") == generate(TopologySpec::complete(3)));

  Graph c4 = generate(TopologySpec::cycle(4));
  CHECK(parse_edge_list(serialize_edge_list(c4)) == c4);
  Graph d = generate(TopologySpec::dmp(0.4, 20), 5);
  CHECK(parse_edge_list(serialize_edge_list(d)) == d);

  CHECK(parse_edge_list("# header\np 2 1\n# edge follows\n0 1\n").edge_count() == 1);

  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("p 2 1\n0 0\n") == 2);
  CHECK(line_of("p 3 3\n0 1\n1 2\n2 1\n") == 4);
  CHECK(line_of("p 3 2\n0 1\n1 3\n") == 3);
  CHECK(line_of("p 4 2\n0 1\n2 3\n") == 1);
  CHECK(line_of("p 3 3\n0 1\n1 2\n") > 0);
  CHECK(line_of("q 3 3\n") == 1);
  CHECK(line_of("p 3 2\n0 x\n1 2\n") == 2);
}
