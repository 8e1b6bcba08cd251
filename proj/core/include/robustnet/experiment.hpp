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
#include <iosfwd>
#include <optional>
#include <vector>

#include "robustnet/graph.hpp"

namespace robustnet {

// Bound-tightness sweep: for each r and n in {2r-1, 2r}, draw G(n, p) graphs
// until `samples_per_p` of them certify r_max == r for every p.
struct ExperimentConfig {
  std::vector<std::size_t> r_values{1, 2, 3, 4, 5, 6};
  std::size_t samples_per_p = 10;
  std::vector<double> p_values{0.7, 0.75, 0.8, 0.85, 0.9};
  bool odd_order = true;   // n = 2r-1
  bool even_order = true;  // n = 2r
  std::uint64_t master_seed = 1;
  std::size_t max_attempts = 100000;  // per (r, n, p)
  std::size_t workers = 0;            // 0: hardware concurrency
};

struct ExperimentRecord {
  std::size_t r = 0;
  std::size_t n = 0;
  double p = 0.0;
  std::size_t attempt = 0;
  std::uint64_t seed = 0;
  std::size_t edge_count = 0;
  std::size_t r_max = 0;
  bool accepted = false;
};

struct SummaryRow {
  std::size_t r = 0;
  std::size_t n = 0;
  std::optional<std::size_t> min_edges_found;
  std::size_t bound = 0;
  std::optional<long long> gap;  // min_edges_found - bound
  std::size_t accepted = 0;
  std::size_t target = 0;
  std::size_t shortfall = 0;
};

struct ExperimentResult {
  // Sorted by (r, n, p, attempt).
  std::vector<ExperimentRecord> records;
  // Sorted by (r, n).
  std::vector<SummaryRow> summary;
};

// Throws InputError on an empty or out-of-range field. `max_order` caps 2r.
void validate(const ExperimentConfig& config, std::size_t max_order);

// Seed of attempt `attempt` for cell (r, n, p):
//   h = splitmix64(master)
//   h = splitmix64(h ^ r); h = splitmix64(h ^ n)
//   h = splitmix64(h ^ round(p * 1e6)); h = splitmix64(h ^ attempt)
std::uint64_t derive_seed(std::uint64_t master, std::size_t r, std::size_t n, double p,
                          std::size_t attempt);

ExperimentResult run_experiment(const ExperimentConfig& config);

// r,n,p,attempt,seed,edge_count,r_max,accepted
void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);
// r,n,min_edges_found,bound,gap,accepted,target,shortfall
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

}  // namespace robustnet
