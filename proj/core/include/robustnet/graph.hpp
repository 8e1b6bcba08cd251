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

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace robustnet {

using Vertex = std::size_t;

// Rows are stored as 64-bit masks, so a graph has at most this many vertices.
inline constexpr std::size_t kMaxVertices = 64;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A subset of {0, ..., universe-1}. Value type; all operations return new sets.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::size_t universe, std::uint64_t bits = 0);

  static NodeSet of(std::size_t universe, std::initializer_list<Vertex> members);
  static NodeSet of(std::size_t universe, std::span<const Vertex> members);
  static NodeSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::uint64_t bits() const { return bits_; }
  std::size_t size() const;
  bool empty() const { return bits_ == 0; }
  bool contains(Vertex v) const { return v < universe_ && ((bits_ >> v) & 1U) != 0; }

  NodeSet with(Vertex v) const;
  NodeSet without(Vertex v) const;
  NodeSet complement() const;
  bool is_subset_of(const NodeSet& other) const { return (bits_ & ~other.bits_) == 0; }
  bool disjoint_with(const NodeSet& other) const { return (bits_ & other.bits_) == 0; }

  // Ascending order.
  std::vector<Vertex> members() const;

  NodeSet operator|(const NodeSet& o) const { return NodeSet(universe_, bits_ | o.bits_); }
  NodeSet operator&(const NodeSet& o) const { return NodeSet(universe_, bits_ & o.bits_); }
  NodeSet operator-(const NodeSet& o) const { return NodeSet(universe_, bits_ & ~o.bits_); }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::uint64_t bits_ = 0;
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  // Throws InputError on n == 0, n > kMaxVertices, self-loops, or
  // out-of-range endpoints. Duplicate pairs collapse.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges);
  explicit Graph(std::size_t n);

  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::size_t min_degree() const;
  NodeSet neighbors(Vertex v) const;
  std::uint64_t row(Vertex v) const { return rows_[v]; }
  NodeSet vertices() const { return NodeSet::full(order()); }

  // Sorted, each edge once with u < v.
  std::vector<Edge> edges() const;

  Graph with_edge_removed(Vertex u, Vertex v) const;
  Graph with_edge_added(Vertex u, Vertex v) const;

  // Vertex v of this graph becomes perm[v] in the result.
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(std::vector<std::uint64_t> rows, std::size_t edge_count)
      : rows_(std::move(rows)), edge_count_(edge_count) {}

  void check_vertex(Vertex v) const;

  std::vector<std::uint64_t> rows_;
  std::size_t edge_count_ = 0;
};

// Maximum clique. Among cliques of maximum size, returns the one whose sorted
// member list is lexicographically smallest.
NodeSet max_clique(const Graph& g);

bool is_clique(const Graph& g, const NodeSet& s);

std::size_t induced_edge_count(const Graph& g, const NodeSet& s);

// Exhaustive search over all k-subsets for the one inducing the most edges.
// Ties go to the lexicographically smallest subset.
std::pair<NodeSet, std::size_t> densest_subset_of_size(const Graph& g, std::size_t k);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

}  // namespace robustnet
