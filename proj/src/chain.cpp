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

#include "edgeswap/chain.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "edgeswap/counting.hpp"
#include "edgeswap/error.hpp"

namespace edgeswap {

std::string_view to_string(Variant v) { return v == Variant::slow ? "slow" : "fast"; }

Variant parse_variant(std::string_view name) {
  if (name == "slow") return Variant::slow;
  if (name == "fast") return Variant::fast;
  throw InvalidSpec("unknown variant '" + std::string(name) + "' (expected slow|fast)");
}

ChainState::ChainState(const Graph& g, std::span<const EdgeId> tree)
    : graph_(&g),
      forest_(g.vertex_count()),
      in_tree_(static_cast<std::size_t>(g.edge_count()), 0),
      position_(static_cast<std::size_t>(g.edge_count()), -1) {
  if (!is_spanning_tree(g, tree)) throw ContractError("edge set is not a spanning tree of the graph");
  for (EdgeId e : tree) {
    in_tree_[e] = 1;
    forest_.link(g.edge(e).u, g.edge(e).v);
  }
  non_tree_.reserve(static_cast<std::size_t>(g.edge_count() - g.vertex_count() + 1));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!in_tree_[e]) {
      position_[e] = static_cast<std::int32_t>(non_tree_.size());
      non_tree_.push_back(e);
    }
  }
}

TreeKey ChainState::tree_key() const {
  TreeKey key;
  key.reserve(static_cast<std::size_t>(graph_->vertex_count() - 1));
  for (EdgeId e = 0; e < graph_->edge_count(); ++e)
    if (in_tree_[e]) key.push_back(e);
  return key;
}

std::vector<EdgeId> ChainState::path_edges(Vertex u, Vertex v) {
  if (u == v) return {};
  PathHandle h = forest_.access(u, v);
  std::vector<Vertex> verts = forest_.path_vertices(h);
  std::vector<EdgeId> out;
  out.reserve(verts.size() - 1);
  for (std::size_t k = 0; k + 1 < verts.size(); ++k) out.push_back(*graph_->find_edge(verts[k], verts[k + 1]));
  return out;
}

std::vector<EdgeId> ChainState::cycle_of(EdgeId e) {
  if (in_tree(e)) throw ContractError("cycle_of: edge " + std::to_string(e) + " is already in the tree");
  std::vector<EdgeId> out = path_edges(graph_->edge(e).u, graph_->edge(e).v);
  out.push_back(e);
  return out;
}

std::optional<EdgeId> ChainState::draw_insert(DrawSource& draws, Variant variant) {
  if (variant == Variant::slow) {
    auto e = static_cast<EdgeId>(draws.uniform_index(static_cast<std::size_t>(graph_->edge_count())));
    if (in_tree_[e]) return std::nullopt;
    return e;
  }
  if (non_tree_.empty()) return std::nullopt;  // the graph is itself a tree
  return non_tree_[draws.uniform_index(non_tree_.size())];
}

StepRecord ChainState::propose(DrawSource& draws, Variant variant) {
  std::optional<EdgeId> e = draw_insert(draws, variant);
  if (!e) return {};
  const Edge& ins = graph_->edge(*e);
  PathHandle h = forest_.access(ins.u, ins.v);
  const std::size_t i = draws.uniform_index(h.length()) + 1;
  auto [a, b] = forest_.select(h, i);
  return StepRecord{e, *graph_->find_edge(a, b), h.length() + 1};
}

StepRecord ChainState::step(DrawSource& draws, Variant variant) {
  ++steps_;
  std::optional<EdgeId> e = draw_insert(draws, variant);
  if (!e) return {};
  const Edge& ins = graph_->edge(*e);
  PathHandle h = forest_.access(ins.u, ins.v);
  const std::size_t i = draws.uniform_index(h.length()) + 1;
  auto [a, b] = forest_.select(h, i);
  forest_.exchange(h);
  StepRecord rec{e, *graph_->find_edge(a, b), h.length() + 1};
  record_swap(*e, *rec.removed);
  return rec;
}

void ChainState::apply(const StepRecord& step) {
  ++steps_;
  if (!step.swapped()) return;
  const EdgeId in = *step.inserted, out = *step.removed;
  forest_.cut(graph_->edge(out).u, graph_->edge(out).v);
  forest_.link(graph_->edge(in).u, graph_->edge(in).v);
  record_swap(in, out);
}

void ChainState::record_swap(EdgeId in, EdgeId out) {
  in_tree_[in] = 1;
  in_tree_[out] = 0;
  const std::int32_t slot = position_[in];
  non_tree_[slot] = out;
  position_[out] = slot;
  position_[in] = -1;
}

void ChainState::check_invariants() {
  const Graph& g = *graph_;
  TreeKey key = tree_key();
  if (!is_spanning_tree(g, key)) throw ContractError("in_tree flags do not describe a spanning tree");
  if (non_tree_.size() != static_cast<std::size_t>(g.edge_count()) - key.size())
    throw ContractError("non-tree list has the wrong size");
  for (std::size_t k = 0; k < non_tree_.size(); ++k) {
    EdgeId e = non_tree_[k];
    if (in_tree_[e] || position_[e] != static_cast<std::int32_t>(k))
      throw ContractError("non-tree list and positions disagree");
  }
  forest_.audit();
  // Every tree edge must be a forest edge: cutting and relinking it succeeds.
  for (EdgeId e : key) {
    forest_.cut(g.edge(e).u, g.edge(e).v);
    forest_.link(g.edge(e).u, g.edge(e).v);
  }
}

ChainState initial_tree(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<char> seen(n, 0);
  std::vector<EdgeId> tree;
  tree.reserve(n - 1);
  // Iterative DFS that mirrors the recursive visit order.
  std::vector<std::pair<Vertex, std::size_t>> stack{{0, 0}};
  seen[0] = 1;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    auto nbrs = g.neighbors(v);
    if (next == nbrs.size()) {
      stack.pop_back();
      continue;
    }
    const Incidence inc = nbrs[next++];
    if (!seen[inc.neighbor]) {
      seen[inc.neighbor] = 1;
      tree.push_back(inc.edge);
      stack.emplace_back(inc.neighbor, 0);
    }
  }
  return ChainState(g, tree);
}

TreeKey sample_tree(const Graph& g, std::uint64_t steps, DrawSource& draws, Variant variant) {
  return sample_tree(initial_tree(g), steps, draws, variant);
}

TreeKey sample_tree(const ChainState& start, std::uint64_t steps, DrawSource& draws, Variant variant) {
  ChainState state = start;
  for (std::uint64_t t = 0; t < steps; ++t) state.step(draws, variant);
  return state.tree_key();
}

Rational TransitionMatrix::at(std::size_t i, std::size_t j) const {
  const auto& row = rows.at(i);
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const auto& entry, std::size_t col) { return entry.first < col; });
  if (it != row.end() && it->first == j) return it->second;
  return 0;
}

std::size_t TransitionMatrix::index_of(const TreeKey& key) const {
  auto it = std::lower_bound(states.begin(), states.end(), key);
  if (it == states.end() || *it != key) throw ContractError("tree is not a state of this matrix");
  return static_cast<std::size_t>(it - states.begin());
}

namespace {

// Tree path between u and v by BFS over the tree's own adjacency.
std::vector<EdgeId> bfs_path(const Graph& g, const std::vector<std::vector<Incidence>>& adj, Vertex u,
                             Vertex v) {
  std::vector<EdgeId> via(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Vertex> from(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Vertex> queue{u};
  from[u] = u;
  for (std::size_t head = 0; head < queue.size() && from[v] < 0; ++head) {
    Vertex x = queue[head];
    for (auto inc : adj[x]) {
      if (from[inc.neighbor] < 0) {
        from[inc.neighbor] = x;
        via[inc.neighbor] = inc.edge;
        queue.push_back(inc.neighbor);
      }
    }
  }
  std::vector<EdgeId> path;
  for (Vertex x = v; x != u; x = from[x]) path.push_back(via[x]);
  return path;
}

}  // namespace

TransitionMatrix transition_matrix(const Graph& g, Variant variant, std::size_t max_states) {
  const BigInt count = kirchhoff_count(g);
  if (count > BigInt(std::to_string(max_states)))
    throw TooLarge("graph has " + count.get_str() + " spanning trees, limit is " + std::to_string(max_states));
  TransitionMatrix m;
  m.states = enumerate_spanning_trees(g);
  m.rows.resize(m.states.size());
  const long edge_count = g.edge_count();
  const long choices = variant == Variant::slow ? edge_count : edge_count - (g.vertex_count() - 1);

  for (std::size_t i = 0; i < m.states.size(); ++i) {
    const TreeKey& tree = m.states[i];
    std::vector<std::vector<Incidence>> adj(static_cast<std::size_t>(g.vertex_count()));
    std::vector<char> member(static_cast<std::size_t>(edge_count), 0);
    for (EdgeId e : tree) {
      member[e] = 1;
      adj[g.edge(e).u].push_back({g.edge(e).v, e});
      adj[g.edge(e).v].push_back({g.edge(e).u, e});
    }
    std::map<std::size_t, Rational> row;
    if (choices == 0) {
      row[i] = 1;  // a tree graph: the only state, fixed forever
    }
    for (EdgeId e = 0; e < edge_count; ++e) {
      if (member[e]) {
        if (variant == Variant::slow) row[i] += Rational(1, edge_count);
        continue;
      }
      std::vector<EdgeId> path = bfs_path(g, adj, g.edge(e).u, g.edge(e).v);
      const Rational weight(1, choices * static_cast<long>(path.size()));
      for (EdgeId f : path) {
        TreeKey next = tree;
        *std::find(next.begin(), next.end(), f) = e;
        std::sort(next.begin(), next.end());
        row[m.index_of(next)] += weight;
      }
    }
    for (auto& [j, p] : row) {
      p.canonicalize();
      m.rows[i].emplace_back(j, p);
    }
  }
  return m;
}

}  // namespace edgeswap
