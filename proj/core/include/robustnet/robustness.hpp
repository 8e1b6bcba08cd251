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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "robustnet/graph.hpp"

namespace robustnet {

// Two disjoint nonempty vertex sets.
struct WitnessPair {
  NodeSet first;
  NodeSet second;

  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

struct RobustnessCheck {
  bool robust = true;
  // A pair where neither side is r-reachable; set iff !robust.
  std::optional<WitnessPair> counterexample;
  std::uint64_t pairs_examined = 0;
};

struct RobustnessCertificate {
  std::size_t r_max = 0;
  // Pair where neither side is (r_max+1)-reachable. Absent only for n == 1.
  std::optional<WitnessPair> witness;
  std::uint64_t pairs_examined = 0;
  // True when r_max comes from the ceil(n/2) convention rather than from
  // enumeration (n == 1, where no disjoint nonempty pair exists).
  bool by_convention = false;
};

enum class BoundKind { kOddCase, kEvenCase, kGeneralCorollary };

struct BoundReport {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t bound = 0;
  BoundKind kind = BoundKind::kGeneralCorollary;
};

std::string to_string(BoundKind kind);

// Largest r for which s is r-reachable: max over i in s of |N(i) \ s|.
std::size_t reachability(const Graph& g, const NodeSet& s);

// Enumerates every unordered pair of disjoint nonempty vertex sets (each
// vertex assigned to first, second or neither; the lowest assigned vertex
// always sits in first) and stops at the first pair where neither side is
// r-reachable. A first set that is already r-reachable settles all pairs it
// belongs to, so its second sets are skipped.
RobustnessCheck check_r_robust(const Graph& g, std::size_t r);
bool is_r_robust(const Graph& g, std::size_t r);

// Exact maximum robustness by binary search over r in
// [0, min(ceil(n/2), min_degree)], plus a witness from the failing check at
// r_max + 1.
RobustnessCertificate max_robustness(const Graph& g);

std::size_t robustness_ceiling(std::size_t n);

// Throws InputError when r == 0 or n < 2r - 1.
BoundReport edge_lower_bound(std::size_t n, std::size_t r);

struct LemmaResult {
  std::string name;
  std::size_t required = 0;  // clique size or induced edge count
  std::size_t found = 0;
  bool passed = false;
  NodeSet witness;
};

struct LemmaReport {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<LemmaResult> results;

  bool all_passed() const;
};

// Necessary structure of r-robust graphs on 2r-1 or 2r vertices:
//   n = 2r-1: an (r+1)-clique;
//   n = 2r:   a floor((r+4)/2)-clique and an (r+1)-vertex induced subgraph
//             with at least floor((r^2+2)/2) edges.
// Throws InputError unless n is 2r-1 or 2r.
LemmaReport check_structural_lemmas(const Graph& g, std::size_t r);

nlohmann::json certificate_to_json(const RobustnessCertificate& cert);

// Largest order the certifier is allowed to run on; ROBUSTNET_MAX_N
// overrides the default of 16.
std::size_t certifier_limit();
inline constexpr std::size_t kDefaultCertifierLimit = 16;

}  // namespace robustnet
