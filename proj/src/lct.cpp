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

#include "edgeswap/lct.hpp"

#include <string>

#include "edgeswap/error.hpp"

namespace edgeswap {

LinkCutForest::LinkCutForest(Vertex n)
    : nodes_(static_cast<std::size_t>(n < 0 ? 1 : n + 1)), scratch_(nodes_.size()) {
  nodes_[kNil].size = 0;
}

bool LinkCutForest::is_splay_root(std::int32_t x) const {
  const std::int32_t p = nodes_[x].parent;
  return nodes_[p].child[0] != x && nodes_[p].child[1] != x;
}

void LinkCutForest::push(std::int32_t x) {
  Node& n = nodes_[x];
  if (!n.flip) return;
  std::swap(n.child[0], n.child[1]);
  nodes_[n.child[0]].flip ^= true;
  nodes_[n.child[1]].flip ^= true;
  n.flip = false;
}

void LinkCutForest::pull(std::int32_t x) {
  Node& n = nodes_[x];
  n.size = 1 + nodes_[n.child[0]].size + nodes_[n.child[1]].size;
}

void LinkCutForest::rotate(std::int32_t x) {
  const std::int32_t p = nodes_[x].parent;
  const std::int32_t g = nodes_[p].parent;
  const int dir = nodes_[p].child[1] == x ? 1 : 0;
  const std::int32_t b = nodes_[x].child[dir ^ 1];
  if (nodes_[g].child[0] == p) {
    nodes_[g].child[0] = x;
  } else if (nodes_[g].child[1] == p) {
    nodes_[g].child[1] = x;
  }
  nodes_[x].parent = g;
  nodes_[p].child[dir] = b;
  nodes_[b].parent = p;
  nodes_[x].child[dir ^ 1] = p;
  nodes_[p].parent = x;
  pull(p);
  pull(x);
  ++rotations_;
}

void LinkCutForest::splay(std::int32_t x) {
  // Flush pending reversals from the splay root down to x.
  std::size_t depth = 0;
  for (std::int32_t y = x;; y = nodes_[y].parent) {
    scratch_[depth++] = y;
    if (is_splay_root(y)) break;
  }
  while (depth > 0) push(scratch_[--depth]);

  while (!is_splay_root(x)) {
    const std::int32_t p = nodes_[x].parent;
    if (!is_splay_root(p)) {
      const std::int32_t g = nodes_[p].parent;
      const bool zigzig = (nodes_[g].child[0] == p) == (nodes_[p].child[0] == x);
      rotate(zigzig ? p : x);
    }
    rotate(x);
  }
  // The sentinel may have been written as a parent; keep it detached.
  nodes_[kNil].parent = kNil;
}

void LinkCutForest::expose(std::int32_t x) {
  std::int32_t last = kNil;
  for (std::int32_t y = x; y != kNil; y = nodes_[y].parent) {
    splay(y);
    nodes_[y].child[1] = last;
    pull(y);
    last = y;
  }
  splay(x);
}

void LinkCutForest::make_root(std::int32_t x) {
  expose(x);
  nodes_[x].flip ^= true;
}

void LinkCutForest::check_vertex(Vertex v) const {
  if (v < 0 || v >= vertex_count())
    throw IndexError("vertex " + std::to_string(v) + " out of range");
}

void LinkCutForest::check_handle(const PathHandle& h) const {
  if (h.version_ != version_ || h.root_ <= kNil)
    throw ContractError("stale path handle: the forest changed since access()");
}

void LinkCutForest::reroot(Vertex u) {
  check_vertex(u);
  ++version_;
  make_root(node_of(u));
}

Vertex LinkCutForest::find_root(Vertex u) {
  check_vertex(u);
  ++version_;
  const std::int32_t x = node_of(u);
  expose(x);
  std::int32_t r = x;
  for (;;) {
    push(r);
    if (nodes_[r].child[0] == kNil) break;
    r = nodes_[r].child[0];
  }
  splay(r);
  return vertex_of(r);
}

bool LinkCutForest::connected(Vertex u, Vertex v) {
  if (u == v) {
    check_vertex(u);
    return true;
  }
  return find_root(u) == find_root(v);
}

void LinkCutForest::link(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  ++version_;
  make_root(node_of(u));
  if (u == v || find_root(v) == u)
    throw CycleViolation("link(" + std::to_string(u) + "," + std::to_string(v) +
                         ") would close a cycle");
  // u is still the splay root of its own tree; hang it off v as a path-parent.
  nodes_[node_of(u)].parent = node_of(v);
}

void LinkCutForest::cut(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  ++version_;
  if (u != v) {
    const std::int32_t x = node_of(u), y = node_of(v);
    make_root(x);
    expose(y);
    push(y);
    // Edge (u,v) exists iff the exposed root..v path is exactly [u, v].
    if (nodes_[y].size == 2 && nodes_[y].child[0] == x) {
      nodes_[y].child[0] = kNil;
      nodes_[x].parent = kNil;
      pull(y);
      return;
    }
  }
  throw MissingEdge("edge (" + std::to_string(u) + "," + std::to_string(v) + ") is not in the forest");
}

PathHandle LinkCutForest::access(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ContractError("access(u, v) needs distinct endpoints");
  ++version_;
  const std::int32_t x = node_of(u), y = node_of(v);
  make_root(x);
  expose(y);
  // Connected iff u is in v's splay tree, which then holds exactly the path.
  std::int32_t top = x;
  while (!is_splay_root(top)) top = nodes_[top].parent;
  if (top != y)
    throw NotConnected("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                       " are in different trees");
  PathHandle h;
  h.from_ = u;
  h.to_ = v;
  h.length_ = static_cast<std::size_t>(nodes_[y].size - 1);
  h.root_ = y;
  h.version_ = version_;
  return h;
}

std::int32_t LinkCutForest::kth(std::int32_t root, std::size_t k) {
  std::int32_t x = root;
  for (;;) {
    push(x);
    const auto left = static_cast<std::size_t>(nodes_[nodes_[x].child[0]].size);
    if (k <= left) {
      x = nodes_[x].child[0];
    } else if (k == left + 1) {
      return x;
    } else {
      k -= left + 1;
      x = nodes_[x].child[1];
    }
  }
}

std::pair<Vertex, Vertex> LinkCutForest::select(PathHandle& h, std::size_t i) {
  check_handle(h);
  if (i < 1 || i > h.length_)
    throw IndexError("select index " + std::to_string(i) + " outside 1.." + std::to_string(h.length_));
  const std::int32_t a = kth(h.root_, i);
  splay(a);
  const std::int32_t b = kth(a, i + 1);
  splay(b);
  h.root_ = b;
  h.selected_ = true;
  return {vertex_of(a), vertex_of(b)};
}

void LinkCutForest::exchange(PathHandle& h) {
  check_handle(h);
  if (!h.selected_) throw ContractError("exchange needs a selected edge on the handle");
  // b sits at the splay root with from()..a as its left subtree, and from()
  // is the represented root. Detaching that subtree cuts (a, b); giving it
  // to() as path-parent hangs from() below to().
  const std::int32_t b = h.root_;
  const std::int32_t left = nodes_[b].child[0];
  nodes_[b].child[0] = kNil;
  pull(b);
  nodes_[left].parent = node_of(h.to_);
  ++version_;
  h.root_ = kNil;
}

std::vector<Vertex> LinkCutForest::path_vertices(PathHandle& h) {
  check_handle(h);
  std::vector<Vertex> out;
  out.reserve(h.length_ + 1);
  std::vector<std::int32_t> stack;
  std::int32_t x = h.root_;
  while (x != kNil || !stack.empty()) {
    while (x != kNil) {
      push(x);
      stack.push_back(x);
      x = nodes_[x].child[0];
    }
    x = stack.back();
    stack.pop_back();
    out.push_back(vertex_of(x));
    x = nodes_[x].child[1];
  }
  return out;
}

void LinkCutForest::audit() const {
  const auto n = static_cast<std::int32_t>(nodes_.size());
  const Node& nil = nodes_[kNil];
  if (nil.size != 0 || nil.child[0] != kNil || nil.child[1] != kNil || nil.parent != kNil)
    throw ContractError("audit: nil sentinel was modified");
  for (std::int32_t x = 1; x < n; ++x) {
    const Node& node = nodes_[x];
    for (std::int32_t c : node.child) {
      if (c == kNil) continue;
      if (c < 1 || c >= n || nodes_[c].parent != x)
        throw ContractError("audit: broken child link at node " + std::to_string(vertex_of(x)));
    }
    if (node.size != 1 + nodes_[node.child[0]].size + nodes_[node.child[1]].size)
      throw ContractError("audit: size counter mismatch at node " + std::to_string(vertex_of(x)));
    // Parent chains (splay + path-parent) must terminate.
    std::int32_t y = x;
    for (std::int32_t steps = 0; y != kNil; ++steps) {
      if (steps > n) throw ContractError("audit: parent cycle through node " + std::to_string(vertex_of(x)));
      y = nodes_[y].parent;
    }
  }
}

}  // namespace edgeswap
