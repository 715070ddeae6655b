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
#include <string>
#include <string_view>
#include <vector>

#include "edgeswap/graph.hpp"

namespace edgeswap {

/// Canonical tree identity: edge indices in ascending order.
using TreeKey = std::vector<EdgeId>;

/// Sorts a copy of `edges` into canonical order.
TreeKey make_key(std::span<const EdgeId> edges);

/// True iff `edges` holds exactly V-1 distinct valid edge indices forming a
/// spanning tree of g.
bool is_spanning_tree(const Graph& g, std::span<const EdgeId> edges);

/// Union-find with union by size and optional rollback.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x) const;
  /// Joins the sets of a and b; false if they were already joined.
  bool unite(std::size_t a, std::size_t b);
  /// Undoes the most recent successful unite().
  void rollback();

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> history_;
};

/// One sampled tree as written by the CLI:
///   s <seed> <steps> <variant>
///   t <u> <v>      (V-1 lines)
struct TreeRecord {
  std::uint64_t seed = 0;
  std::string steps;    // integer or the sampler name for non-chain samplers
  std::string variant;  // slow|fast|-
  TreeKey edges;
};

std::string serialize_tree_record(const Graph& g, const TreeRecord& rec);
/// Parses every record in `text`; throws ParseError on malformed lines or on
/// "t" lines naming a non-edge of g.
std::vector<TreeRecord> parse_tree_records(const Graph& g, std::string_view text);

}  // namespace edgeswap
