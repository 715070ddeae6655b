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

// Independent reference implementations shared by the unit and acceptance
// tests. Nothing here calls into the link-cut forest.

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "edgeswap/graph.hpp"
#include "edgeswap/rng.hpp"
#include "edgeswap/tree.hpp"

namespace oracle {

using edgeswap::EdgeId;
using edgeswap::Rational;
using edgeswap::Vertex;

/// Walks every branch of a randomized routine. Each uniform_index(n) is a
/// branch point with weight 1/n; bernoulli(p) branches into p and 1-p unless
/// p is 0 or 1. `run` must rebuild its state from scratch on every call.
class ExhaustiveDraws final : public edgeswap::DrawSource {
 public:
  template <class Run, class Visit>
  static std::size_t enumerate(Run run, Visit visit) {
    ExhaustiveDraws d;
    std::size_t branches = 0;
    do {
      d.pos_ = 0;
      d.weight_ = 1;
      auto result = run(static_cast<edgeswap::DrawSource&>(d));
      if (d.pos_ != d.trail_.size()) throw std::logic_error("run consumed a different number of draws");
      visit(result, d.weight_);
      ++branches;
    } while (d.advance());
    return branches;
  }

  std::size_t uniform_index(std::size_t n) override {
    Choice& c = next(n, false);
    weight_ /= Rational(static_cast<long>(n));
    return c.taken;
  }

  bool bernoulli(const Rational& p) override {
    if (p == 0) return false;
    if (p == 1) return true;
    Choice& c = next(2, true);
    weight_ *= c.taken == 0 ? p : Rational(1 - p);
    return c.taken == 0;
  }

 private:
  struct Choice {
    std::size_t taken = 0;
    std::size_t options = 0;
    bool coin = false;
  };

  Choice& next(std::size_t n, bool coin) {
    if (pos_ == trail_.size()) trail_.push_back({0, n, coin});
    Choice& c = trail_[pos_++];
    if (c.options != n || c.coin != coin) throw std::logic_error("draw sequence diverged from its prefix");
    return c;
  }

  bool advance() {
    while (!trail_.empty()) {
      if (++trail_.back().taken < trail_.back().options) return true;
      trail_.pop_back();
    }
    return false;
  }

  std::vector<Choice> trail_;
  std::size_t pos_ = 0;
  Rational weight_ = 1;
};

/// Forest as adjacency sets; connectivity and paths by BFS.
class NaiveForest {
 public:
  explicit NaiveForest(int n) : adj_(static_cast<std::size_t>(n)) {}

  bool has_edge(int u, int v) const { return adj_[u].count(v) > 0; }
  void link(int u, int v) {
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
  void cut(int u, int v) {
    adj_[u].erase(v);
    adj_[v].erase(u);
  }
  bool connected(int u, int v) const { return !path(u, v).empty() || u == v; }

  /// Vertex sequence from u to v, empty if disconnected or u == v.
  std::vector<int> path(int u, int v) const {
    if (u == v) return {};
    std::vector<int> from(adj_.size(), -1);
    std::vector<int> queue{u};
    from[u] = u;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int w : adj_[queue[h]])
        if (from[w] < 0) {
          from[w] = queue[h];
          queue.push_back(w);
        }
    if (from[v] < 0) return {};
    std::vector<int> out{v};
    while (out.back() != u) out.push_back(from[out.back()]);
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<std::set<int>> adj_;
};

/// Tree path edges between u and v in a tree given by edge indices.
inline std::vector<EdgeId> tree_path(const edgeswap::Graph& g, const std::vector<EdgeId>& tree, Vertex u, Vertex v) {
  NaiveForest f(g.vertex_count());
  for (EdgeId e : tree) f.link(g.edge(e).u, g.edge(e).v);
  std::vector<int> verts = f.path(u, v);
  std::vector<EdgeId> out;
  for (std::size_t k = 0; k + 1 < verts.size(); ++k) out.push_back(*g.find_edge(verts[k], verts[k + 1]));
  return out;
}

/// Two hubs 0 and 1 joined by internally disjoint paths of the given lengths.
inline edgeswap::Graph theta_graph(std::vector<int> lengths) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex next = 2;
  for (int len : lengths) {
    Vertex prev = 0;
    for (int k = 1; k < len; ++k) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  }
  return edgeswap::Graph(next, edges);
}

/// All spanning trees at edge distance exactly 1 from each other, as index pairs.
inline std::vector<std::pair<std::size_t, std::size_t>> adjacent_pairs(const std::vector<edgeswap::TreeKey>& trees) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = 0; j < trees.size(); ++j) {
      if (i == j) continue;
      std::vector<EdgeId> diff;
      std::set_difference(trees[i].begin(), trees[i].end(), trees[j].begin(), trees[j].end(),
                          std::back_inserter(diff));
      if (diff.size() == 1) out.emplace_back(i, j);
    }
  return out;
}

/// a/b in lowest terms; the two-argument mpq constructor does not reduce.
inline Rational ratio(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

/// Binomial standard deviation of a frequency estimate.
inline double binomial_sigma(double p, double n) { return std::sqrt(p * (1 - p) / n); }

/// Exact law of the union-find sampler on g: every edge permutation.
inline std::map<edgeswap::TreeKey, Rational> biased_law(const edgeswap::Graph& g) {
  std::vector<EdgeId> perm(static_cast<std::size_t>(g.edge_count()));
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<EdgeId>(i);
  std::map<edgeswap::TreeKey, long> counts;
  long total = 0;
  do {
    edgeswap::DisjointSets sets(static_cast<std::size_t>(g.vertex_count()));
    edgeswap::TreeKey t;
    for (EdgeId e : perm)
      if (sets.unite(g.edge(e).u, g.edge(e).v)) t.push_back(e);
    std::sort(t.begin(), t.end());
    ++counts[t];
    ++total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<edgeswap::TreeKey, Rational> law;
  for (auto& [t, c] : counts) {
    Rational q(c, total);
    q.canonicalize();
    law[t] = q;
  }
  return law;
}

}  // namespace oracle
