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
#include <optional>
#include <span>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "robustnet/graph.hpp"

namespace robustnet {

enum class TreeShape { kPath, kStar, kRandom };

// Connected subgraph placed on the non-hub vertices of an F-elemental graph.
enum class TailShape { kPath, kStar, kComplete, kRandomTree };

// Maximally robust graph on 2r-1 vertices with exactly 3r(r-1)/2 edges.
// Hubs {0..r-2} are adjacent to everything; {r-1..2r-2} carry a tree.
// `seed` is consulted only for TreeShape::kRandom.
Graph sparsest_odd(std::size_t r, TreeShape shape = TreeShape::kPath, std::uint64_t seed = 0);

// Maximally robust graph on 2r vertices with floor((r(3r-2)+2)/2) edges.
// Hubs {0..r-1} are adjacent to everything, then the hub edges
// (0,1), (2,3), ... are dropped for delta = r-1 (r odd) or r-2 (r even)
// hubs.
Graph sparsest_even(std::size_t r);

// Same as sparsest_even but with caller-chosen hub pairs. Pairs must be
// disjoint, lie inside {0..r-1}, and number exactly delta/2.
Graph sparsest_even(std::size_t r, std::span<const std::pair<Vertex, Vertex>> removed_pairs);

std::size_t hub_pair_count(std::size_t r);

// 4F+1 vertices: a 2F-vertex hub set adjacent to everything plus a connected
// tail on the remaining 2F+1 vertices. (2F+1)-robust.
Graph f_elemental(std::size_t f, TailShape tail = TailShape::kPath, std::uint64_t seed = 0);

// G(n, p). Pairs (u, v), u < v, are visited in lexicographic order and each is
// kept when the next mt19937_64 draw, mapped to [0, 1) from its top 53 bits,
// falls below p.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

// Uniform tree on `count` vertices labelled first..first+count-1, from a
// Pruefer sequence drawn from mt19937_64.
std::vector<Edge> random_tree(Vertex first, std::size_t count, std::uint64_t seed);

enum class RecipeKind { kSparsestOdd, kSparsestEven, kFElemental, kErdosRenyi, kTree };

// sparsest-odd / sparsest-even take r; f-elemental takes an odd r = 2F+1;
// erdos-renyi and tree take n. p is present only for erdos-renyi and seed only
// for randomized kinds (erdos-renyi, or a random tree shape).
struct ConstructionRecipe {
  RecipeKind kind = RecipeKind::kSparsestOdd;
  std::optional<std::size_t> r;
  std::optional<std::size_t> n;
  std::optional<double> p;
  std::optional<std::uint64_t> seed;
  std::optional<TreeShape> tree_shape;
};

std::string to_string(RecipeKind kind);
std::string to_string(TreeShape shape);
RecipeKind parse_recipe_kind(const std::string& s);
TreeShape parse_tree_shape(const std::string& s);

// Checks field presence rules; throws InputError naming the offending field.
void validate(const ConstructionRecipe& recipe);
Graph build(const ConstructionRecipe& recipe);

ConstructionRecipe recipe_from_json(const nlohmann::json& j);
nlohmann::json recipe_to_json(const ConstructionRecipe& recipe);

}  // namespace robustnet
