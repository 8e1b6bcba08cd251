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

#include "robustnet/robustness.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

#include "robustnet/error.hpp"

namespace robustnet {
namespace {

// True iff some member of s has at least r neighbours outside s.
bool reaches(const Graph& g, std::uint64_t s, std::size_t r) {
  for (std::uint64_t b = s; b != 0; b &= b - 1) {
    const auto outside = std::popcount(g.row(std::countr_zero(b)) & ~s);
    if (static_cast<std::size_t>(outside) >= r) return true;
  }
  return false;
}

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kOddCase:
      return "odd-case";
    case BoundKind::kEvenCase:
      return "even-case";
    case BoundKind::kGeneralCorollary:
      return "general-corollary";
  }
  return "unknown";
}

std::size_t reachability(const Graph& g, const NodeSet& s) {
  if (s.universe() != g.order()) throw InputError("node set does not belong to this graph");
  if (s.empty()) throw InputError("reachability of an empty set is undefined");
  std::size_t best = 0;
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) {
    const auto outside = std::popcount(g.row(std::countr_zero(b)) & ~s.bits());
    best = std::max(best, static_cast<std::size_t>(outside));
  }
  return best;
}

RobustnessCheck check_r_robust(const Graph& g, std::size_t r) {
  RobustnessCheck result;
  if (r == 0) return result;
  const std::size_t n = g.order();
  const std::uint64_t full = g.vertices().bits();

  for (std::uint64_t first = 1; first <= full && first != 0; ++first) {
    if (reaches(g, first, r)) continue;
    const std::uint64_t lowest = first & (~first + 1);
    const std::uint64_t allowed = full & ~first & ~((lowest << 1) - 1);
    // Nonempty submasks of `allowed` in increasing numeric order.
    for (std::uint64_t second = (0 - allowed) & allowed; second != 0;
         second = (second - allowed) & allowed) {
      ++result.pairs_examined;
      if (!reaches(g, second, r)) {
        result.robust = false;
        result.counterexample = WitnessPair{NodeSet(n, first), NodeSet(n, second)};
        return result;
      }
    }
  }
  return result;
}

bool is_r_robust(const Graph& g, std::size_t r) { return check_r_robust(g, r).robust; }

std::size_t robustness_ceiling(std::size_t n) { return (n + 1) / 2; }

RobustnessCertificate max_robustness(const Graph& g) {
  RobustnessCertificate cert;
  if (g.order() == 1) {
    cert.r_max = robustness_ceiling(1);
    cert.by_convention = true;
    return cert;
  }

  std::size_t lo = 0;
  std::size_t hi = std::min(robustness_ceiling(g.order()), g.min_degree());
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    const RobustnessCheck check = check_r_robust(g, mid);
    cert.pairs_examined += check.pairs_examined;
    if (check.robust) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  cert.r_max = lo;

  const RobustnessCheck above = check_r_robust(g, lo + 1);
  cert.pairs_examined += above.pairs_examined;
  if (above.robust) {
    // Unreachable for n >= 2: {v} and its complement always cap robustness.
    throw std::logic_error("certifier found no witness above r_max");
  }
  cert.witness = above.counterexample;
  return cert;
}

BoundReport edge_lower_bound(std::size_t n, std::size_t r) {
  if (r == 0) throw InputError("edge lower bound requires r >= 1");
  if (n + 1 < 2 * r) {
    throw InputError("no " + std::to_string(r) + "-robust graph on " + std::to_string(n) +
                     " nodes (need n >= 2r-1)");
  }
  BoundReport report{n, r, 0, BoundKind::kGeneralCorollary};
  const std::size_t odd_case = 3 * r * (r - 1) / 2;
  if (n + 1 == 2 * r) {
    report.bound = odd_case;
    report.kind = BoundKind::kOddCase;
  } else if (n == 2 * r) {
    report.bound = (r * (3 * r - 2) + 2) / 2;
    report.kind = BoundKind::kEvenCase;
  } else {
    report.bound = odd_case;
  }
  return report;
}

bool LemmaReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const LemmaResult& l) { return l.passed; });
}

LemmaReport check_structural_lemmas(const Graph& g, std::size_t r) {
  const std::size_t n = g.order();
  if (r == 0 || (n + 1 != 2 * r && n != 2 * r)) {
    throw InputError("structural checks apply only to n = 2r-1 or n = 2r (got n=" +
                     std::to_string(n) + ", r=" + std::to_string(r) + ")");
  }
  LemmaReport report{n, r, {}};
  const NodeSet clique = max_clique(g);
  if (n + 1 == 2 * r) {
    report.results.push_back({"clique-odd", r + 1, clique.size(), clique.size() >= r + 1, clique});
    return report;
  }
  const std::size_t clique_needed = (r + 4) / 2;
  report.results.push_back(
      {"clique-even", clique_needed, clique.size(), clique.size() >= clique_needed, clique});
  const auto [dense, count] = densest_subset_of_size(g, r + 1);
  const std::size_t edges_needed = (r * r + 2) / 2;
  report.results.push_back({"dense-subgraph", edges_needed, count, count >= edges_needed, dense});
  return report;
}

nlohmann::json certificate_to_json(const RobustnessCertificate& cert) {
  nlohmann::json j;
  j["r_max"] = cert.r_max;
  if (cert.witness) {
    j["witness"] = {{"s1", cert.witness->first.members()}, {"s2", cert.witness->second.members()}};
  } else {
    j["witness"] = nullptr;
  }
  j["pairs_examined"] = cert.pairs_examined;
  return j;
}

std::size_t certifier_limit() {
  const char* raw = std::getenv("ROBUSTNET_MAX_N");
  if (raw == nullptr || *raw == '\0') return kDefaultCertifierLimit;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0 || value > kMaxVertices) {
    throw InputError("ROBUSTNET_MAX_N must be an integer in [1, " + std::to_string(kMaxVertices) +
                     "]");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace robustnet
