// Copyright 2026 The robustnet Authors
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

#include "robustnet/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "robustnet/error.hpp"

namespace robustnet {
namespace {

std::uint64_t universe_mask(std::size_t universe) {
  return universe >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
}

std::string vertex_message(Vertex v, std::size_t n) {
  return "vertex " + std::to_string(v) + " out of range for graph on " + std::to_string(n) +
         " vertices";
}

}  // namespace

NodeSet::NodeSet(std::size_t universe, std::uint64_t bits) : universe_(universe), bits_(bits) {
  if (universe > kMaxVertices) {
    throw InputError("node set universe exceeds " + std::to_string(kMaxVertices));
  }
  if ((bits & ~universe_mask(universe)) != 0) {
    throw InputError("node set member outside universe of size " + std::to_string(universe));
  }
}

NodeSet NodeSet::of(std::size_t universe, std::initializer_list<Vertex> members) {
  return of(universe, std::span<const Vertex>(members.begin(), members.size()));
}

NodeSet NodeSet::of(std::size_t universe, std::span<const Vertex> members) {
  std::uint64_t bits = 0;
  for (Vertex v : members) {
    if (v >= universe) throw InputError(vertex_message(v, universe));
    bits |= std::uint64_t{1} << v;
  }
  return NodeSet(universe, bits);
}

NodeSet NodeSet::full(std::size_t universe) { return NodeSet(universe, universe_mask(universe)); }

std::size_t NodeSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

NodeSet NodeSet::with(Vertex v) const {
  if (v >= universe_) throw InputError(vertex_message(v, universe_));
  return NodeSet(universe_, bits_ | (std::uint64_t{1} << v));
}

NodeSet NodeSet::without(Vertex v) const {
  if (v >= universe_) throw InputError(vertex_message(v, universe_));
  return NodeSet(universe_, bits_ & ~(std::uint64_t{1} << v));
}

NodeSet NodeSet::complement() const { return NodeSet(universe_, ~bits_ & universe_mask(universe_)); }

std::vector<Vertex> NodeSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<Vertex>(std::countr_zero(b)));
  }
  return out;
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw InputError("graph must have at least one vertex");
  if (n > kMaxVertices) {
    throw InputError("graph on " + std::to_string(n) + " vertices exceeds the limit of " +
                     std::to_string(kMaxVertices));
  }
  rows_.assign(n, 0);
  for (const Edge& e : edges) {
    if (e.u >= n) throw InputError(vertex_message(e.u, n));
    if (e.v >= n) throw InputError(vertex_message(e.v, n));
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    rows_[e.u] |= std::uint64_t{1} << e.v;
    rows_[e.v] |= std::uint64_t{1} << e.u;
  }
  std::size_t degree_sum = 0;
  for (std::uint64_t row : rows_) degree_sum += static_cast<std::size_t>(std::popcount(row));
  edge_count_ = degree_sum / 2;
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph::Graph(std::size_t n) : Graph(n, std::span<const Edge>{}) {}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) throw InputError(vertex_message(v, order()));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return ((rows_[u] >> v) & 1U) != 0;
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<std::size_t>(std::popcount(rows_[v]));
}

std::size_t Graph::min_degree() const {
  std::size_t best = order();
  for (std::uint64_t row : rows_) {
    best = std::min(best, static_cast<std::size_t>(std::popcount(row)));
  }
  return best;
}

NodeSet Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return NodeSet(order(), rows_[v]);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    std::uint64_t above = u + 1 >= 64 ? 0 : rows_[u] & ~((std::uint64_t{1} << (u + 1)) - 1);
    for (; above != 0; above &= above - 1) {
      out.push_back({u, static_cast<Vertex>(std::countr_zero(above))});
    }
  }
  return out;
}

Graph Graph::with_edge_removed(Vertex u, Vertex v) const {
  if (u == v || !adjacent(u, v)) {
    throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") is not present");
  }
  std::vector<std::uint64_t> rows = rows_;
  rows[u] &= ~(std::uint64_t{1} << v);
  rows[v] &= ~(std::uint64_t{1} << u);
  return Graph(std::move(rows), edge_count_ - 1);
}

Graph Graph::with_edge_added(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) return *this;
  std::vector<std::uint64_t> rows = rows_;
  rows[u] |= std::uint64_t{1} << v;
  rows[v] |= std::uint64_t{1} << u;
  return Graph(std::move(rows), edge_count_ + 1);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != order()) throw InputError("permutation length does not match graph order");
  std::vector<bool> seen(order(), false);
  for (Vertex p : perm) {
    if (p >= order() || seen[p]) throw InputError("relabeling is not a permutation");
    seen[p] = true;
  }
  std::vector<Edge> mapped;
  for (const Edge& e : edges()) mapped.push_back({perm[e.u], perm[e.v]});
  return Graph(order(), mapped);
}

bool is_clique(const Graph& g, const NodeSet& s) {
  for (Vertex v : s.members()) {
    std::uint64_t others = s.bits() & ~(std::uint64_t{1} << v);
    if ((g.row(v) & others) != others) return false;
  }
  return true;
}

namespace {

// Depth-first over vertex sets in lexicographic order of their sorted member
// lists. A branch is cut only when it cannot beat the incumbent strictly, so
// the first maximum found is the lexicographically smallest one.
void extend_clique(const Graph& g, std::uint64_t current, std::uint64_t candidates,
                   std::uint64_t& best) {
  const int current_size = std::popcount(current);
  if (current_size > std::popcount(best)) best = current;
  while (candidates != 0) {
    if (current_size + std::popcount(candidates) <= std::popcount(best)) return;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    extend_clique(g, current | (std::uint64_t{1} << v), candidates & g.row(v), best);
  }
}

}  // namespace

NodeSet max_clique(const Graph& g) {
  std::uint64_t best = 0;
  extend_clique(g, 0, g.vertices().bits(), best);
  return NodeSet(g.order(), best);
}

std::size_t induced_edge_count(const Graph& g, const NodeSet& s) {
  if (s.universe() != g.order()) throw InputError("node set does not belong to this graph");
  std::size_t twice = 0;
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) {
    twice += static_cast<std::size_t>(std::popcount(g.row(std::countr_zero(b)) & s.bits()));
  }
  return twice / 2;
}

std::pair<NodeSet, std::size_t> densest_subset_of_size(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (k < 1 || k > n) {
    throw InputError("subset size " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  }
  // Combinations in lexicographic order; index[i] is the i-th smallest member.
  std::vector<Vertex> index(k);
  for (std::size_t i = 0; i < k; ++i) index[i] = i;

  std::uint64_t best_bits = 0;
  std::size_t best_count = 0;
  bool have_best = false;
  while (true) {
    std::uint64_t bits = 0;
    for (Vertex v : index) bits |= std::uint64_t{1} << v;
    const std::size_t count = induced_edge_count(g, NodeSet(n, bits));
    if (!have_best || count > best_count) {
      best_bits = bits;
      best_count = count;
      have_best = true;
    }
    std::size_t i = k;
    while (i > 0 && index[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++index[i - 1];
    for (std::size_t j = i; j < k; ++j) index[j] = index[j - 1] + 1;
  }
  return {NodeSet(n, best_bits), best_count};
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  if (n >= 3) {
    for (Vertex u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n});
  } else if (n == 2) {
    edges.push_back({0, 1});
  }
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return Graph(n, edges);
}

}  // namespace robustnet
