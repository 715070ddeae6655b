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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace edgeswap {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

/// Unordered vertex pair, stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Immutable simple connected undirected graph over vertices 0..V-1.
///
/// Edges are addressed by their index in `edges()`, which is what the
/// samplers draw uniformly. Construction validates simplicity and
/// connectivity; a `Graph` that exists is always well formed.
class Graph {
 public:
  /// Throws InvalidSpec on self-loops, duplicates, out-of-range endpoints,
  /// or a disconnected result.
  Graph(Vertex vertex_count, std::vector<std::pair<Vertex, Vertex>> edges);

  Vertex vertex_count() const noexcept { return vertex_count_; }
  EdgeId edge_count() const noexcept { return static_cast<EdgeId>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Incidence> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[static_cast<std::size_t>(v)],
            adjacency_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
  }
  Vertex degree(Vertex v) const noexcept { return static_cast<Vertex>(neighbors(v).size()); }

  /// Edge index joining u and v, if any.
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  static std::uint64_t key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (std::uint64_t(std::uint32_t(u)) << 32) | std::uint32_t(v);
  }

  Vertex vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> adjacency_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
};

enum class TopologyKind { cycle, ladder, complete, biK, torus, dmp };

/// Parameters of a generated topology.
///
/// - cycle(n), complete(n), biK(n): `n` vertices (per half for biK).
/// - ladder(n): `n` rungs, V = 2n, E = 3n - 2.
/// - torus(rows, cols): wrap-around grid, E = 2 * rows * cols.
/// - dmp: `steps` partial-duplication steps with copy probability `p`,
///   grown from `dmp_base` (a triangle when unset).
struct TopologySpec {
  TopologyKind kind = TopologyKind::cycle;
  int n = 0;
  int rows = 0;
  int cols = 0;
  double p = 0.0;
  int steps = 0;
  std::shared_ptr<const TopologySpec> dmp_base;

  static TopologySpec cycle(int n) { return sized(TopologyKind::cycle, n); }
  static TopologySpec ladder(int rungs) { return sized(TopologyKind::ladder, rungs); }
  static TopologySpec complete(int n) { return sized(TopologyKind::complete, n); }
  static TopologySpec bi_complete(int n) { return sized(TopologyKind::biK, n); }
  static TopologySpec torus(int rows, int cols) {
    TopologySpec s;
    s.kind = TopologyKind::torus;
    s.rows = rows;
    s.cols = cols;
    return s;
  }
  static TopologySpec dmp(double p, int steps, std::shared_ptr<const TopologySpec> base = nullptr) {
    TopologySpec s;
    s.kind = TopologyKind::dmp;
    s.p = p;
    s.steps = steps;
    s.dmp_base = std::move(base);
    return s;
  }

 private:
  static TopologySpec sized(TopologyKind kind, int n) {
    TopologySpec s;
    s.kind = kind;
    s.n = n;
    return s;
  }
};

std::string_view to_string(TopologyKind kind);
/// Inverse of to_string; throws InvalidSpec on unknown names.
TopologyKind parse_topology_kind(std::string_view name);

/// Short identifier such as "ladder-7" or "dmp-p0.25-s20", used in CSV output.
std::string graph_id(const TopologySpec& spec);

/// Builds the topology. Deterministic in (spec, seed); only dmp reads the seed.
Graph generate(const TopologySpec& spec, std::uint64_t seed = 0);

/// Parses the "p <V> <E>" edge-list format. Throws ParseError naming the line.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

}  // namespace edgeswap
