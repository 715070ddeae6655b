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

#include "edgeswap/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "edgeswap/error.hpp"
#include "edgeswap/rng.hpp"

namespace edgeswap {

namespace {

// Number of vertices reachable from 0.
Vertex reachable_from_zero(Vertex n, const std::vector<std::size_t>& offsets,
                           const std::vector<Incidence>& adjacency) {
  if (n == 0) return 0;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  Vertex count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (std::size_t k = offsets[v]; k < offsets[v + 1]; ++k) {
      Vertex w = adjacency[k].neighbor;
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count;
}

}  // namespace

Graph::Graph(Vertex vertex_count, std::vector<std::pair<Vertex, Vertex>> edges)
    : vertex_count_(vertex_count) {
  if (vertex_count < 1) throw InvalidSpec("graph needs at least one vertex");
  edges_.reserve(edges.size());
  index_.reserve(edges.size() * 2);
  std::vector<std::size_t> degree(static_cast<std::size_t>(vertex_count), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw InvalidSpec("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw InvalidSpec("self-loop at vertex " + std::to_string(u));
    auto id = static_cast<EdgeId>(edges_.size());
    if (!index_.emplace(key(u, v), id).second)
      throw InvalidSpec("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    edges_.push_back({std::min(u, v), std::max(u, v)});
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
  for (Vertex v = 0; v < vertex_count; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId e = 0; e < edge_count(); ++e) {
    auto [u, v] = edges_[e];
    adjacency_[fill[u]++] = {v, e};
    adjacency_[fill[v]++] = {u, e};
  }
  if (reachable_from_zero(vertex_count, offsets_, adjacency_) != vertex_count)
    throw InvalidSpec("graph is disconnected");
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  auto it = index_.find(key(u, v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string_view to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::cycle: return "cycle";
    case TopologyKind::ladder: return "ladder";
    case TopologyKind::complete: return "complete";
    case TopologyKind::biK: return "biK";
    case TopologyKind::torus: return "torus";
    case TopologyKind::dmp: return "dmp";
  }
  return "?";
}

TopologyKind parse_topology_kind(std::string_view name) {
  for (auto k : {TopologyKind::cycle, TopologyKind::ladder, TopologyKind::complete,
                 TopologyKind::biK, TopologyKind::torus, TopologyKind::dmp}) {
    if (to_string(k) == name) return k;
  }
  // Aliases used by the experiment tables.
  if (name == "dense") return TopologyKind::complete;
  if (name == "sparse") return TopologyKind::ladder;
  throw InvalidSpec("unknown topology '" + std::string(name) + "'");
}

std::string graph_id(const TopologySpec& spec) {
  std::string id(to_string(spec.kind));
  switch (spec.kind) {
    case TopologyKind::torus:
      return id + "-" + std::to_string(spec.rows) + "x" + std::to_string(spec.cols);
    case TopologyKind::dmp: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "-p%g-s%d", spec.p, spec.steps);
      return id + buf;
    }
    default:
      return id + "-" + std::to_string(spec.n);
  }
}

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidSpec(what);
}

EdgeList complete_edges(Vertex n, Vertex offset) {
  EdgeList out;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) out.emplace_back(offset + i, offset + j);
  return out;
}

Graph make_dmp(const TopologySpec& spec, std::uint64_t seed) {
  require(spec.p >= 0.0 && spec.p <= 1.0, "dmp probability must lie in [0,1]");
  require(spec.steps >= 0, "dmp steps must be >= 0");
  Graph base = spec.dmp_base ? generate(*spec.dmp_base, seed) : generate(TopologySpec::cycle(3));
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(base.vertex_count()));
  for (auto e : base.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  EdgeList edges;
  for (auto e : base.edges()) edges.emplace_back(e.u, e.v);

  Rng rng(seed);
  for (int t = 0; t < spec.steps; ++t) {
    auto u = static_cast<Vertex>(rng.uniform_index(adj.size()));
    auto v = static_cast<Vertex>(adj.size());
    // Snapshot u's neighbours before v joins them.
    std::vector<Vertex> copy_from = adj[u];
    adj.emplace_back();
    adj[u].push_back(v);
    adj[v].push_back(u);
    edges.emplace_back(u, v);
    for (Vertex w : copy_from) {
      if (rng.uniform01() < spec.p) {
        adj[v].push_back(w);
        adj[w].push_back(v);
        edges.emplace_back(v, w);
      }
    }
  }
  return Graph(static_cast<Vertex>(adj.size()), std::move(edges));
}

}  // namespace

Graph generate(const TopologySpec& spec, std::uint64_t seed) {
  const int n = spec.n;
  switch (spec.kind) {
    case TopologyKind::cycle: {
      require(n >= 3, "cycle needs n >= 3");
      EdgeList e;
      for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
      return Graph(n, std::move(e));
    }
    case TopologyKind::ladder: {
      require(n >= 2, "ladder needs >= 2 rungs");
      // Top rail 0..n-1, bottom rail n..2n-1, rung i joins i and n+i.
      EdgeList e;
      for (Vertex i = 0; i < n; ++i) {
        e.emplace_back(i, n + i);
        if (i + 1 < n) {
          e.emplace_back(i, i + 1);
          e.emplace_back(n + i, n + i + 1);
        }
      }
      return Graph(2 * n, std::move(e));
    }
    case TopologyKind::complete:
      require(n >= 3, "complete graph needs n >= 3");
      return Graph(n, complete_edges(n, 0));
    case TopologyKind::biK: {
      require(n >= 3, "biK needs halves of >= 3 vertices");
      EdgeList e = complete_edges(n, 0);
      EdgeList right = complete_edges(n, n);
      e.insert(e.end(), right.begin(), right.end());
      e.emplace_back(0, n);
      e.emplace_back(1, n + 1);
      return Graph(2 * n, std::move(e));
    }
    case TopologyKind::torus: {
      const int r = spec.rows, c = spec.cols;
      require(r >= 3 && c >= 3, "torus needs at least 3x3");
      EdgeList e;
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) {
          e.emplace_back(i * c + j, i * c + (j + 1) % c);
          e.emplace_back(i * c + j, ((i + 1) % r) * c + j);
        }
      }
      return Graph(r * c, std::move(e));
    }
    case TopologyKind::dmp:
      return make_dmp(spec, seed);
  }
  throw InvalidSpec("unknown topology kind");
}

namespace {

bool parse_int(std::string_view tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  long long vertex_count = -1, edge_count = -1;
  std::size_t header_line = 0;
  EdgeList edges;
  std::unordered_map<std::uint64_t, std::size_t> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (vertex_count < 0) {
      if (toks.size() != 3 || toks[0] != "p" || !parse_int(toks[1], vertex_count) ||
          !parse_int(toks[2], edge_count) || vertex_count < 1 || edge_count < 0)
        throw ParseError(line_no, "expected header 'p <V> <E>'");
      header_line = line_no;
      continue;
    }
    long long u, v;
    if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
      throw ParseError(line_no, "expected '<u> <v>'");
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw ParseError(line_no, "vertex index out of range [0," + std::to_string(vertex_count) + ")");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    std::uint64_t k = (std::uint64_t(std::min(u, v)) << 32) | std::uint64_t(std::max(u, v));
    if (auto [it, fresh] = seen.emplace(k, line_no); !fresh)
      throw ParseError(line_no, "duplicate edge (first seen on line " + std::to_string(it->second) + ")");
    if (static_cast<long long>(edges.size()) == edge_count)
      throw ParseError(line_no, "more edges than declared in header");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (vertex_count < 0) throw ParseError(line_no, "missing 'p <V> <E>' header");
  if (static_cast<long long>(edges.size()) != edge_count)
    throw ParseError(line_no, "header declares " + std::to_string(edge_count) + " edges, found " +
                                  std::to_string(edges.size()));
  try {
    return Graph(static_cast<Vertex>(vertex_count), std::move(edges));
  } catch (const InvalidSpec& e) {
    throw ParseError(header_line, e.what());
  }
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace edgeswap
