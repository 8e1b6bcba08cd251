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

#include "robustnet/construct.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "robustnet/error.hpp"

namespace robustnet {
namespace {

// Uniform on [0, bound) by rejection; std::uniform_int_distribution is not
// specified bit-for-bit across standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

// Every vertex in [0, hubs) joined to every other vertex of an n-vertex graph.
std::vector<Edge> hub_edges(std::size_t hubs, std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex h = 0; h < hubs; ++h) {
    for (Vertex v = h + 1; v < n; ++v) edges.push_back({h, v});
  }
  return edges;
}

std::vector<Edge> tree_edges(Vertex first, std::size_t count, TreeShape shape, std::uint64_t seed) {
  std::vector<Edge> edges;
  switch (shape) {
    case TreeShape::kPath:
      for (std::size_t i = 1; i < count; ++i) edges.push_back({first + i - 1, first + i});
      break;
    case TreeShape::kStar:
      for (std::size_t i = 1; i < count; ++i) edges.push_back({first, first + i});
      break;
    case TreeShape::kRandom:
      edges = random_tree(first, count, seed);
      break;
  }
  return edges;
}

}  // namespace

std::vector<Edge> random_tree(Vertex first, std::size_t count, std::uint64_t seed) {
  std::vector<Edge> edges;
  if (count < 2) return edges;
  if (count == 2) return {{first, first + 1}};
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> code(count - 2);
  for (auto& c : code) c = bounded(rng, count);

  std::vector<std::size_t> degree(count, 1);
  for (std::size_t c : code) ++degree[c];
  for (std::size_t c : code) {
    const std::size_t leaf =
        static_cast<std::size_t>(std::find(degree.begin(), degree.end(), 1) - degree.begin());
    edges.push_back({first + std::min(leaf, c), first + std::max(leaf, c)});
    --degree[leaf];
    --degree[c];
  }
  std::vector<std::size_t> rest;
  for (std::size_t v = 0; v < count; ++v) {
    if (degree[v] == 1) rest.push_back(v);
  }
  edges.push_back({first + rest[0], first + rest[1]});
  return edges;
}

Graph sparsest_odd(std::size_t r, TreeShape shape, std::uint64_t seed) {
  if (r < 1) throw InputError("sparsest_odd requires r >= 1");
  const std::size_t n = 2 * r - 1;
  std::vector<Edge> edges = hub_edges(r - 1, n);
  const auto tree = tree_edges(r - 1, r, shape, seed);
  edges.insert(edges.end(), tree.begin(), tree.end());
  return Graph(n, edges);
}

std::size_t hub_pair_count(std::size_t r) {
  const std::size_t delta = r % 2 == 1 ? r - 1 : r - 2;
  return delta / 2;
}

Graph sparsest_even(std::size_t r) {
  if (r < 1) throw InputError("sparsest_even requires r >= 1");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < hub_pair_count(r); ++i) pairs.emplace_back(2 * i, 2 * i + 1);
  return sparsest_even(r, pairs);
}

Graph sparsest_even(std::size_t r, std::span<const std::pair<Vertex, Vertex>> removed_pairs) {
  if (r < 1) throw InputError("sparsest_even requires r >= 1");
  if (removed_pairs.size() != hub_pair_count(r)) {
    throw InputError("sparsest_even(" + std::to_string(r) + ") needs exactly " +
                     std::to_string(hub_pair_count(r)) + " hub pairs");
  }
  const std::size_t n = 2 * r;
  std::vector<bool> used(r, false);
  Graph g(n, hub_edges(r, n));
  for (const auto& [a, b] : removed_pairs) {
    if (a >= r || b >= r || a == b || used[a] || used[b]) {
      throw InputError("hub pairs must be disjoint pairs of distinct hubs in [0, r)");
    }
    used[a] = used[b] = true;
    g = g.with_edge_removed(a, b);
  }
  return g;
}

Graph f_elemental(std::size_t f, TailShape tail, std::uint64_t seed) {
  if (f < 1) throw InputError("f_elemental requires F >= 1");
  const std::size_t n = 4 * f + 1;
  const std::size_t hubs = 2 * f;
  const std::size_t tail_size = 2 * f + 1;
  std::vector<Edge> edges = hub_edges(hubs, n);
  std::vector<Edge> tail_edges;
  switch (tail) {
    case TailShape::kPath:
      tail_edges = tree_edges(hubs, tail_size, TreeShape::kPath, seed);
      break;
    case TailShape::kStar:
      tail_edges = tree_edges(hubs, tail_size, TreeShape::kStar, seed);
      break;
    case TailShape::kRandomTree:
      tail_edges = tree_edges(hubs, tail_size, TreeShape::kRandom, seed);
      break;
    case TailShape::kComplete:
      for (Vertex u = hubs; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) tail_edges.push_back({u, v});
      }
      break;
  }
  edges.insert(edges.end(), tail_edges.begin(), tail_edges.end());
  return Graph(n, edges);
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw InputError("erdos_renyi requires n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < p) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

std::string to_string(RecipeKind kind) {
  switch (kind) {
    case RecipeKind::kSparsestOdd:
      return "sparsest-odd";
    case RecipeKind::kSparsestEven:
      return "sparsest-even";
    case RecipeKind::kFElemental:
      return "f-elemental";
    case RecipeKind::kErdosRenyi:
      return "erdos-renyi";
    case RecipeKind::kTree:
      return "tree";
  }
  return "unknown";
}

std::string to_string(TreeShape shape) {
  switch (shape) {
    case TreeShape::kPath:
      return "path";
    case TreeShape::kStar:
      return "star";
    case TreeShape::kRandom:
      return "random";
  }
  return "unknown";
}

RecipeKind parse_recipe_kind(const std::string& s) {
  for (auto kind : {RecipeKind::kSparsestOdd, RecipeKind::kSparsestEven, RecipeKind::kFElemental,
                    RecipeKind::kErdosRenyi, RecipeKind::kTree}) {
    if (to_string(kind) == s) return kind;
  }
  throw InputError("unknown construction kind '" + s + "'");
}

TreeShape parse_tree_shape(const std::string& s) {
  for (auto shape : {TreeShape::kPath, TreeShape::kStar, TreeShape::kRandom}) {
    if (to_string(shape) == s) return shape;
  }
  throw InputError("unknown tree shape '" + s + "'");
}

void validate(const ConstructionRecipe& recipe) {
  const std::string kind = to_string(recipe.kind);
  const bool wants_r = recipe.kind == RecipeKind::kSparsestOdd ||
                       recipe.kind == RecipeKind::kSparsestEven ||
                       recipe.kind == RecipeKind::kFElemental;
  const bool wants_n = !wants_r;
  const bool takes_shape = recipe.kind == RecipeKind::kSparsestOdd ||
                           recipe.kind == RecipeKind::kFElemental ||
                           recipe.kind == RecipeKind::kTree;
  const bool random_shape = recipe.tree_shape == TreeShape::kRandom;
  const bool wants_p = recipe.kind == RecipeKind::kErdosRenyi;
  const bool wants_seed = wants_p || (takes_shape && random_shape);

  if (wants_r && !recipe.r) throw InputError(kind + " recipe requires r");
  if (!wants_r && recipe.r) throw InputError(kind + " recipe does not take r");
  if (wants_n && !recipe.n) throw InputError(kind + " recipe requires n");
  if (!wants_n && recipe.n) throw InputError(kind + " recipe does not take n");
  if (wants_p != recipe.p.has_value()) {
    throw InputError(wants_p ? kind + " recipe requires p" : kind + " recipe does not take p");
  }
  if (wants_seed != recipe.seed.has_value()) {
    throw InputError(wants_seed ? kind + " recipe requires seed"
                                : kind + " recipe does not take seed");
  }
  if (!takes_shape && recipe.tree_shape) throw InputError(kind + " recipe does not take tree_shape");
  if (recipe.r && *recipe.r < 1) throw InputError("r must be >= 1");
  if (recipe.n && *recipe.n < 1) throw InputError("n must be >= 1");
  if (recipe.kind == RecipeKind::kFElemental && (*recipe.r < 3 || *recipe.r % 2 == 0)) {
    throw InputError("f-elemental recipe requires odd r = 2F+1 >= 3");
  }
  if (recipe.p && !(*recipe.p >= 0.0 && *recipe.p <= 1.0)) {
    throw InputError("p must lie in [0, 1]");
  }
}

Graph build(const ConstructionRecipe& recipe) {
  validate(recipe);
  const TreeShape shape = recipe.tree_shape.value_or(TreeShape::kPath);
  const std::uint64_t seed = recipe.seed.value_or(0);
  switch (recipe.kind) {
    case RecipeKind::kSparsestOdd:
      return sparsest_odd(*recipe.r, shape, seed);
    case RecipeKind::kSparsestEven:
      return sparsest_even(*recipe.r);
    case RecipeKind::kFElemental: {
      const TailShape tail = shape == TreeShape::kPath   ? TailShape::kPath
                             : shape == TreeShape::kStar ? TailShape::kStar
                                                         : TailShape::kRandomTree;
      return f_elemental((*recipe.r - 1) / 2, tail, seed);
    }
    case RecipeKind::kErdosRenyi:
      return erdos_renyi(*recipe.n, *recipe.p, seed);
    case RecipeKind::kTree:
      return Graph(*recipe.n, tree_edges(0, *recipe.n, shape, seed));
  }
  throw InputError("unknown construction kind");
}

ConstructionRecipe recipe_from_json(const nlohmann::json& j) {
  try {
    ConstructionRecipe recipe;
    recipe.kind = parse_recipe_kind(j.at("kind").get<std::string>());
    if (j.contains("r") && !j["r"].is_null()) recipe.r = j["r"].get<std::size_t>();
    if (j.contains("n") && !j["n"].is_null()) recipe.n = j["n"].get<std::size_t>();
    if (j.contains("p") && !j["p"].is_null()) recipe.p = j["p"].get<double>();
    if (j.contains("seed") && !j["seed"].is_null()) recipe.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("tree_shape") && !j["tree_shape"].is_null()) {
      recipe.tree_shape = parse_tree_shape(j["tree_shape"].get<std::string>());
    }
    validate(recipe);
    return recipe;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed recipe JSON: ") + e.what());
  }
}

nlohmann::json recipe_to_json(const ConstructionRecipe& recipe) {
  nlohmann::json j{{"kind", to_string(recipe.kind)}};
  if (recipe.r) j["r"] = *recipe.r;
  if (recipe.n) j["n"] = *recipe.n;
  if (recipe.p) j["p"] = *recipe.p;
  if (recipe.seed) j["seed"] = *recipe.seed;
  if (recipe.tree_shape) j["tree_shape"] = to_string(*recipe.tree_shape);
  return j;
}

}  // namespace robustnet
