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

#include "edgeswap/tree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "edgeswap/error.hpp"

namespace edgeswap {

TreeKey make_key(std::span<const EdgeId> edges) {
  TreeKey key(edges.begin(), edges.end());
  std::sort(key.begin(), key.end());
  return key;
}

bool is_spanning_tree(const Graph& g, std::span<const EdgeId> edges) {
  if (static_cast<Vertex>(edges.size()) != g.vertex_count() - 1) return false;
  DisjointSets sets(static_cast<std::size_t>(g.vertex_count()));
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    if (!sets.unite(g.edge(e).u, g.edge(e).v)) return false;
  }
  return true;
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) const {
  while (parent_[x] != x) x = parent_[x];
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  history_.push_back(b);
  return true;
}

void DisjointSets::rollback() {
  std::size_t b = history_.back();
  history_.pop_back();
  std::size_t a = parent_[b];
  size_[a] -= size_[b];
  parent_[b] = b;
}

std::string serialize_tree_record(const Graph& g, const TreeRecord& rec) {
  std::ostringstream out;
  out << "s " << rec.seed << ' ' << rec.steps << ' ' << rec.variant << '\n';
  for (EdgeId e : rec.edges) out << "t " << g.edge(e).u << ' ' << g.edge(e).v << '\n';
  return out.str();
}

std::vector<TreeRecord> parse_tree_records(const Graph& g, std::string_view text) {
  std::vector<TreeRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "s") {
      TreeRecord rec;
      if (!(fields >> rec.seed >> rec.steps >> rec.variant))
        throw ParseError(line_no, "expected 's <seed> <steps> <variant>'");
      out.push_back(std::move(rec));
    } else if (tag == "t") {
      long long u, v;
      if (out.empty()) throw ParseError(line_no, "'t' line before any 's' header");
      if (!(fields >> u >> v)) throw ParseError(line_no, "expected 't <u> <v>'");
      auto e = g.find_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || !e)
        throw ParseError(line_no, "not an edge of the graph");
      out.back().edges.push_back(*e);
    } else {
      throw ParseError(line_no, "unknown record tag '" + tag + "'");
    }
  }
  for (auto& rec : out) std::sort(rec.edges.begin(), rec.edges.end());
  return out;
}

}  // namespace edgeswap
