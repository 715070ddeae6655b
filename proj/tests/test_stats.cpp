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

#include <cmath>
#include <random>

#include "edgeswap/baselines.hpp"
#include "edgeswap/counting.hpp"
#include "edgeswap/coupling.hpp"
#include "edgeswap/error.hpp"
#include "edgeswap/stats.hpp"
#include "oracles.hpp"

using namespace edgeswap;

namespace {

TreeDistribution random_distribution(const std::vector<TreeKey>& support, std::mt19937_64& rng) {
  std::vector<std::uint64_t> w(support.size());
  for (auto& x : w) x = rng() % 7;
  w[rng() % w.size()] += 1;
  return TreeDistribution::from_counts(support, w);
}

}  // namespace

TEST_CASE("variation distance basics") {
  auto trees = enumerate_spanning_trees(generate(TopologySpec::complete(4)));
  TreeDistribution u = TreeDistribution::uniform(trees);
  CHECK(variation_distance(u, u) == 0);
  CHECK(variation_distance(TreeDistribution::point(trees, 0), TreeDistribution::point(trees, 5)) == 1);
  CHECK(variation_distance(TreeDistribution::point(trees, 0), u) == Rational(15, 16));
  auto other = enumerate_spanning_trees(generate(TopologySpec::cycle(4)));
  CHECK_THROWS_AS(variation_distance(u, TreeDistribution::uniform(other)), ContractError);
}

TEST_CASE("variation distance is a metric") {
  auto trees = enumerate_spanning_trees(generate(TopologySpec::ladder(3)));
  std::mt19937_64 rng(4);
  for (int k = 0; k < 300; ++k) {
    TreeDistribution a = random_distribution(trees, rng), b = random_distribution(trees, rng),
                     c = random_distribution(trees, rng);
    Rational ab = variation_distance(a, b);
    CHECK(ab == variation_distance(b, a));
    CHECK(ab >= 0);
    CHECK(ab <= 1);
    CHECK((ab == 0) == (a.mass == b.mass));
    CHECK(ab <= variation_distance(a, c) + variation_distance(c, b));
    CHECK(variation_distance(a, a) == 0);
  }
}

TEST_CASE("biased law sits strictly away from uniform") {
  Graph g = generate(TopologySpec::complete(4));
  auto trees = enumerate_spanning_trees(g);
  auto law = oracle::biased_law(g);
  TreeDistribution biased{trees, {}};
  for (const auto& t : trees) biased.mass.push_back(law.at(t));
  Rational vd = variation_distance(biased, TreeDistribution::uniform(trees));
  CHECK(vd > 0);
  std::size_t stars = 0;
  for (Vertex c = 0; c < 4; ++c) {
    TreeKey star;
    for (Vertex v = 0; v < 4; ++v)
      if (v != c) star.push_back(*g.find_edge(c, v));
    std::sort(star.begin(), star.end());
    CHECK(law.at(star) == Rational(1, 15));
    ++stars;
  }
  CHECK(stars == 4);
  // Stars gain 1/15 - 1/16 each; paths lose the same total.
  CHECK(vd == 4 * (Rational(1, 15) - Rational(1, 16)));
}

TEST_CASE("edge distance") {
  TreeKey a{0, 1, 2, 5}, b{0, 1, 3, 5};
  CHECK(edge_distance(a, a) == 0);
  CHECK(edge_distance(a, b) == 1);
  CHECK(edge_distance(b, a) == 1);
  CHECK(edge_distance(TreeKey{0, 1}, TreeKey{2, 3}) == 2);
  CHECK_THROWS_AS(edge_distance(a, TreeKey{0, 1}), ContractError);

  auto cyc = enumerate_spanning_trees(generate(TopologySpec::cycle(9)));
  for (const auto& s : cyc)
    for (const auto& t : cyc) CHECK(edge_distance(s, t) <= 1);

  Graph g = generate(TopologySpec::torus(3, 4));
  Rng rng(2);
  for (int k = 0; k < 200; ++k) {
    TreeKey s = wilson(g, rng), t = wilson(g, rng);
    std::vector<EdgeId> diff;
    std::set_difference(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(diff));
    CHECK(edge_distance(s, t) == diff.size());
    CHECK(edge_distance(s, t) == edge_distance(t, s));
    CHECK(edge_distance(s, t) <= static_cast<std::size_t>(g.vertex_count() - 1));
  }
}

TEST_CASE("histogram distance and chi-square") {
  std::vector<std::uint64_t> a{10, 30}, b{20, 20}, c{1, 3};
  CHECK(histogram_distance(a, b) == doctest::Approx(0.25));
  CHECK(histogram_distance(a, c) == doctest::Approx(0.0));
  CHECK_THROWS_AS(histogram_distance(a, std::vector<std::uint64_t>{1, 2, 3}), ContractError);

  std::vector<std::uint64_t> obs{10, 20, 30};
  std::vector<double> expect{1.0 / 3, 1.0 / 3, 1.0 / 3};
  ChiSquareResult r = chi_square_gof(obs, expect);
  CHECK(r.statistic == doctest::Approx(10.0));
  CHECK(r.dof == 2);
  CHECK(r.p_value == doctest::Approx(std::exp(-5.0)));
}

TEST_CASE("exact empirical VD") {
  Graph k4 = generate(TopologySpec::complete(4));
  auto trees = enumerate_spanning_trees(k4);
  std::size_t next = 0;
  TreeSampler round_robin = [&](DrawSource&) { return trees[next++ % trees.size()]; };
  Rng rng(1);
  CHECK(exact_empirical_vd(trees, round_robin, 1600, rng) == 0.0);
  TreeSampler fixed = [&](DrawSource&) { return trees[3]; };
  CHECK(exact_empirical_vd(trees, fixed, 10, rng) == doctest::Approx(15.0 / 16));

  auto law = oracle::biased_law(k4);
  TreeDistribution biased{trees, {}};
  for (const auto& t : trees) biased.mass.push_back(law.at(t));
  const double exact = variation_distance(biased, TreeDistribution::uniform(trees)).get_d();
  TreeSampler uf = [&](DrawSource& d) { return biased_union_find(k4, d); };
  Rng r2(2);
  double vd = exact_empirical_vd(k4, uf, 1000000, r2);
  CHECK(vd > 0.01);
  CHECK(std::abs(vd - exact) < 0.005);
}

TEST_CASE("complete(4) edge-swap with an estimated step count") {
  Graph k4 = generate(TopologySpec::complete(4));
  MixingEstimate est = path_coupling_estimate(k4, Rng(3), CouplingMode::optimistic);
  REQUIRE(est.tau_hat.has_value());
  const std::uint64_t steps = *est.tau_hat;
  TreeSampler chain = [&](DrawSource& d) { return sample_tree(k4, steps, d, Variant::fast); };
  Rng rng(4);
  CHECK(exact_empirical_vd(k4, chain, 1600, rng) < 0.2);
}

TEST_CASE("simple VD at t = 0 on complete(8) is far above the floor") {
  Graph g = generate(TopologySpec::complete(8));
  VDEstimate est = estimate_simple_vd(g, 0, Rng(6));
  CHECK(est.per_reference.size() == 20);
  CHECK(est.epsilon_hat > 0.1);
  CHECK_FALSE(est.below_floor);
  double mx = 0;
  for (const auto& r : est.per_reference) mx = std::max(mx, r.simple_vd);
  CHECK(est.epsilon_hat == mx);
}

TEST_CASE("simple VD shrinks with more steps on a slow cycle chain") {
  Graph g = generate(TopologySpec::cycle(12));
  SimpleVDConfig cfg;
  cfg.variant = Variant::slow;
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(100 + seed);
    auto refs = prepare_references(g, rng, cfg);
    double early = estimate_simple_vd(g, 3, rng, cfg, refs).epsilon_hat;
    double late = estimate_simple_vd(g, 12, rng, cfg, refs).epsilon_hat;
    if (early >= late) ++wins;
  }
  // One-sided sign test at 0.05 over 10 pairs needs at least 9 successes.
  CHECK(wins >= 9);
}

TEST_CASE("simple VD CSV and the floor") {
  Graph g = generate(TopologySpec::complete(5));
  VDEstimate est;
  est.t = 7;
  est.epsilon_hat = 0.03;
  est.below_floor = true;
  est.per_reference = {{0, 0.03, 1000, false}, {1, 0.01, 2000, true}};
  std::string csv = vd_estimate_csv("complete-5", g, est, 0.1);
  CHECK(csv.rfind("graph_id,V,E,t,reference,simple_vd,epsilon_hat,samples,capped\n", 0) == 0);
  CHECK(csv.find("complete-5,5,10,7,0,0.03,<0.1,1000,0\n") != std::string::npos);
  CHECK(csv.find("complete-5,5,10,7,1,0.01,<0.1,2000,1\n") != std::string::npos);
}
