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

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "edgeswap/graph.hpp"

namespace edgeswap {

/// A root-to-vertex path materialized as one splay tree by
/// `LinkCutForest::access`. Only valid until the forest's next operation
/// (other than `select`/`path_vertices` on this handle).
class PathHandle {
 public:
  Vertex from() const noexcept { return from_; }
  Vertex to() const noexcept { return to_; }
  /// Number of edges on the path.
  std::size_t length() const noexcept { return length_; }

 private:
  friend class LinkCutForest;
  Vertex from_ = -1;
  Vertex to_ = -1;
  std::size_t length_ = 0;
  std::int32_t root_ = -1;
  std::uint64_t version_ = 0;
  bool selected_ = false;
};

/// Dynamic forest over vertices 0..n-1 (Sleator-Tarjan link-cut tree).
///
/// Preferred paths live in splay trees keyed by depth; each node carries a
/// lazy reversal bit (for reroot) and its splay-subtree size (for select).
/// All operations are O(log n) amortized. Single-owner mutable; copies are
/// deep and independent.
class LinkCutForest {
 public:
  explicit LinkCutForest(Vertex n = 0);

  Vertex vertex_count() const noexcept { return static_cast<Vertex>(nodes_.size() - 1); }

  /// Joins two trees with edge (u, v). Throws CycleViolation if u and v are
  /// already connected (including u == v).
  void link(Vertex u, Vertex v);
  /// Removes forest edge (u, v). Throws MissingEdge if it is not present.
  void cut(Vertex u, Vertex v);
  /// Makes u the root of its represented tree.
  void reroot(Vertex u);
  bool connected(Vertex u, Vertex v);
  Vertex find_root(Vertex u);

  /// Reroots at u and exposes the u..v path. Throws NotConnected, or
  /// ContractError when u == v.
  PathHandle access(Vertex u, Vertex v);
  /// The i-th edge (1-based) of the exposed path, counted from its `from()`
  /// end, as (closer-to-from, closer-to-to). Throws IndexError if out of range.
  std::pair<Vertex, Vertex> select(PathHandle& h, std::size_t i);
  /// Vertices of the exposed path in order from `from()` to `to()`.
  std::vector<Vertex> path_vertices(PathHandle& h);
  /// Cuts the edge returned by the last select on h and links from() to
  /// to(). O(1); invalidates h.
  void exchange(PathHandle& h);

  /// Total splay rotations performed so far.
  std::uint64_t rotations() const noexcept { return rotations_; }

  /// Full structural walk: checks child/parent links and size counters.
  /// Throws ContractError on the first inconsistency.
  void audit() const;

 private:
  // Node 0 is a nil sentinel with size 0; vertex v lives at node v + 1.
  static constexpr std::int32_t kNil = 0;
  struct Node {
    std::int32_t child[2] = {kNil, kNil};
    std::int32_t parent = kNil;  // splay parent, or path-parent at a splay root
    std::int32_t size = 1;
    bool flip = false;
  };

  static std::int32_t node_of(Vertex v) { return v + 1; }
  static Vertex vertex_of(std::int32_t x) { return x - 1; }
  bool is_splay_root(std::int32_t x) const;
  void push(std::int32_t x);
  void pull(std::int32_t x);
  void rotate(std::int32_t x);
  void splay(std::int32_t x);
  void expose(std::int32_t x);
  void make_root(std::int32_t x);
  std::int32_t kth(std::int32_t root, std::size_t k);
  void check_vertex(Vertex v) const;
  void check_handle(const PathHandle& h) const;

  std::vector<Node> nodes_;
  std::uint64_t rotations_ = 0;
  std::uint64_t version_ = 0;
  std::vector<std::int32_t> scratch_;
};

}  // namespace edgeswap
