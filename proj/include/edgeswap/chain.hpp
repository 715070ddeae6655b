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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "edgeswap/graph.hpp"
#include "edgeswap/lct.hpp"
#include "edgeswap/rng.hpp"
#include "edgeswap/tree.hpp"

namespace edgeswap {

/// slow: insert an edge drawn from all of E (tree edges give a self-loop).
/// fast: insert an edge drawn from E \ A only.
enum class Variant { slow, fast };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);

/// Outcome of one edge-swap step. Both fields empty means the chain stayed put.
struct StepRecord {
  std::optional<EdgeId> inserted;
  std::optional<EdgeId> removed;
  std::size_t cycle_length = 0;  // |C| when a swap happened

  bool swapped() const noexcept { return inserted.has_value(); }
};

/// Current spanning tree of the edge-swap chain.
///
/// Holds the tree in a link-cut forest plus an O(1) membership array and a
/// dense list of non-tree edges (with back-positions) so that both chain
/// variants sample and update in O(1) outside the forest work.
class ChainState {
 public:
  /// Throws ContractError unless `tree` is a spanning tree of g.
  /// g must outlive the state.
  ChainState(const Graph& g, std::span<const EdgeId> tree);

  const Graph& graph() const noexcept { return *graph_; }
  bool in_tree(EdgeId e) const { return in_tree_[static_cast<std::size_t>(e)] != 0; }
  std::span<const EdgeId> non_tree_edges() const noexcept { return non_tree_; }
  TreeKey tree_key() const;
  std::uint64_t step_count() const noexcept { return steps_; }
  LinkCutForest& forest() noexcept { return forest_; }

  /// Tree edges on the u..v path, in order from u.
  std::vector<EdgeId> path_edges(Vertex u, Vertex v);
  /// The cycle closed by adding non-tree edge e: the tree path between its
  /// endpoints followed by e itself.
  std::vector<EdgeId> cycle_of(EdgeId e);

  /// Draws one step without changing the tree. Draw order: the inserted edge
  /// index (over E, or over the non-tree list for fast), then, if a swap
  /// follows, the 1-based position on the exposed path.
  StepRecord propose(DrawSource& draws, Variant variant);
  /// Applies a proposal (cut removed, link inserted) and advances the step count.
  void apply(const StepRecord& step);
  /// propose followed by apply, with the swap done on the exposed path.
  StepRecord step(DrawSource& draws, Variant variant);

  /// Re-derives every invariant from scratch; throws ContractError on failure.
  void check_invariants();

 private:
  const Graph* graph_;
  LinkCutForest forest_;
  std::vector<std::uint8_t> in_tree_;
  std::vector<EdgeId> non_tree_;
  std::vector<std::int32_t> position_;  // index into non_tree_, or -1
  std::uint64_t steps_ = 0;

  std::optional<EdgeId> draw_insert(DrawSource& draws, Variant variant);
  void record_swap(EdgeId in, EdgeId out);
};

/// Depth-first-search tree from vertex 0, neighbours in adjacency order.
ChainState initial_tree(const Graph& g);

/// initial_tree followed by `steps` edge-swap steps; returns the final tree.
TreeKey sample_tree(const Graph& g, std::uint64_t steps, DrawSource& draws, Variant variant);
/// Same, running a copy of `start`.
TreeKey sample_tree(const ChainState& start, std::uint64_t steps, DrawSource& draws, Variant variant);

/// Sparse square matrix of exact rationals indexed by spanning trees.
struct TransitionMatrix {
  std::vector<TreeKey> states;  // canonical order
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;  // sorted by column

  std::size_t size() const noexcept { return states.size(); }
  Rational at(std::size_t i, std::size_t j) const;
  std::size_t index_of(const TreeKey& key) const;
};

inline constexpr std::size_t kTransitionStateLimit = std::size_t{1} << 14;

/// Exact one-step transition law of the chain. Cycles are found by BFS on
/// each tree, independently of the link-cut machinery. Throws TooLarge above
/// `max_states` spanning trees.
TransitionMatrix transition_matrix(const Graph& g, Variant variant = Variant::slow,
                                   std::size_t max_states = kTransitionStateLimit);

}  // namespace edgeswap
