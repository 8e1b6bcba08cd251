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

#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "random_graphs.hpp"
#include "robustnet/construct.hpp"
#include "robustnet/error.hpp"
#include "robustnet/graph.hpp"

using namespace robustnet;

TEST_CASE("new graph from edge pairs") {
  const Graph single(2, {{0, 1}});
  CHECK(single.edge_count() == 1);

  const Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(triangle.edge_count() == 3);
  for (Vertex v = 0; v < 3; ++v) CHECK(triangle.degree(v) == 2);

  const Graph dup(3, {{0, 1}, {1, 0}});
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("new graph rejects bad input") {
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph(0), InputError);
  CHECK_THROWS_AS(Graph(kMaxVertices + 1), InputError);
}

TEST_CASE("neighbors") {
  CHECK(complete_graph(3).neighbors(0).members() == std::vector<Vertex>{1, 2});
  CHECK(path_graph(3).neighbors(1).members() == std::vector<Vertex>{0, 2});
  CHECK(Graph(3, {{0, 1}}).neighbors(2).empty());
  CHECK_THROWS_AS(path_graph(3).neighbors(3), InputError);
}

TEST_CASE("neighbor relation is symmetric and irreflexive") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + trial % 12, 0.4);
    std::size_t degree_sum = 0;
    for (Vertex i = 0; i < g.order(); ++i) {
      CHECK_FALSE(g.neighbors(i).contains(i));
      for (Vertex j = 0; j < g.order(); ++j) {
        CHECK(g.neighbors(i).contains(j) == g.neighbors(j).contains(i));
      }
      degree_sum += g.degree(i);
    }
    CHECK(g.edge_count() * 2 == degree_sum);
    CHECK(induced_edge_count(g, g.vertices()) == g.edge_count());
  }
}

TEST_CASE("max clique") {
  CHECK(max_clique(complete_graph(5)).size() == 5);
  CHECK(max_clique(cycle_graph(4)).size() == 2);
  CHECK(max_clique(cycle_graph(4)).members() == std::vector<Vertex>{0, 1});
  CHECK(max_clique(Graph(3)).size() == 1);
  CHECK(max_clique(sparsest_even(5)).size() >= 4);
}

TEST_CASE("max clique picks the lexicographically smallest maximum") {
  // Two disjoint triangles {1,2,3} and {0,4,5}: {0,4,5} < {1,2,3}.
  const Graph g(6, {{1, 2}, {2, 3}, {1, 3}, {0, 4}, {4, 5}, {0, 5}});
  CHECK(max_clique(g).members() == std::vector<Vertex>{0, 4, 5});
}

TEST_CASE("max clique agrees with exhaustive scan") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const Graph g = testing::random_graph(rng, n, 0.2 + 0.6 * (trial % 5) / 4.0);
    const NodeSet c = max_clique(g);
    CHECK(is_clique(g, c));
    CHECK(c.size() == oracle::clique_number(g));
  }
}

TEST_CASE("induced edge count") {
  CHECK(induced_edge_count(complete_graph(5), NodeSet::of(5, {0, 2, 4})) == 3);
  CHECK(induced_edge_count(complete_graph(5), NodeSet::of(5, {3})) == 0);
  CHECK(induced_edge_count(complete_graph(5), NodeSet(5)) == 0);
  // Hubs {0..4} plus vertex 5: 10 hub edges minus the two dropped pairs, plus
  // five hub-to-5 edges.
  CHECK(induced_edge_count(sparsest_even(5), NodeSet::of(10, {0, 1, 2, 3, 4, 5})) == 13);
}

TEST_CASE("densest subset of size") {
  CHECK(densest_subset_of_size(complete_graph(5), 3).second == 3);
  CHECK(densest_subset_of_size(complete_graph(5), 3).first.members() ==
        std::vector<Vertex>{0, 1, 2});
  CHECK(densest_subset_of_size(sparsest_even(5), 6).second >= 13);
  CHECK(densest_subset_of_size(path_graph(3), 2).second == 1);
  CHECK_THROWS_AS(densest_subset_of_size(path_graph(3), 0), InputError);
  CHECK_THROWS_AS(densest_subset_of_size(path_graph(3), 4), InputError);
}

TEST_CASE("densest subset agrees with naive enumeration") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const Graph g = testing::random_graph(rng, n, 0.5);
    const std::size_t k = 1 + trial % n;
    const auto [set, count] = densest_subset_of_size(g, k);
    CHECK(set.size() == k);
    CHECK(induced_edge_count(g, set) == count);
    CHECK(count == oracle::densest_count(g, k));
  }
}

TEST_CASE("edge removal leaves the original untouched") {
  const Graph k3 = complete_graph(3);
  const Graph path = k3.with_edge_removed(0, 1);
  CHECK(path.edge_count() == 2);
  CHECK(k3.edge_count() == 3);
  CHECK(Graph(2, {{0, 1}}).with_edge_removed(1, 0).edge_count() == 0);
  CHECK_THROWS_AS(path.with_edge_removed(0, 1), InputError);
  const Graph odd = sparsest_odd(3);
  for (const Edge& e : odd.edges()) CHECK(odd.with_edge_removed(e.u, e.v).edge_count() == 8);
}

TEST_CASE("relabeling permutes adjacency") {
  const Graph g = path_graph(4);
  const std::vector<Vertex> perm{3, 1, 0, 2};
  const Graph h = g.relabeled(perm);
  for (const Edge& e : g.edges()) CHECK(h.adjacent(perm[e.u], perm[e.v]));
  CHECK(h.edge_count() == g.edge_count());
  CHECK_THROWS_AS(g.relabeled(std::vector<Vertex>{0, 0, 1, 2}), InputError);
}
