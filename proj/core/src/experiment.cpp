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

#include "robustnet/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <tuple>

#include "robustnet/construct.hpp"
#include "robustnet/error.hpp"
#include "robustnet/robustness.hpp"

namespace robustnet {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", p);
  return buf;
}

struct Cell {
  std::size_t r;
  std::size_t n;
  double p;
};

std::vector<ExperimentRecord> run_cell(const ExperimentConfig& config, const Cell& cell) {
  std::vector<ExperimentRecord> records;
  std::size_t accepted = 0;
  for (std::size_t attempt = 0; attempt < config.max_attempts && accepted < config.samples_per_p;
       ++attempt) {
    const std::uint64_t seed = derive_seed(config.master_seed, cell.r, cell.n, cell.p, attempt);
    const Graph g = erdos_renyi(cell.n, cell.p, seed);
    const RobustnessCertificate cert = max_robustness(g);
    const bool ok = cert.r_max == cell.r;
    if (ok) ++accepted;
    records.push_back({cell.r, cell.n, cell.p, attempt, seed, g.edge_count(), cert.r_max, ok});
  }
  return records;
}

}  // namespace

void validate(const ExperimentConfig& config, std::size_t max_order) {
  if (config.r_values.empty()) throw InputError("experiment needs at least one r value");
  if (config.p_values.empty()) throw InputError("experiment needs at least one p value");
  if (config.samples_per_p < 1) throw InputError("samples_per_p must be >= 1");
  if (config.max_attempts < 1) throw InputError("max_attempts must be >= 1");
  if (!config.odd_order && !config.even_order) {
    throw InputError("experiment needs at least one node offset (2r-1 or 2r)");
  }
  for (double p : config.p_values) {
    if (!(p > 0.0 && p <= 1.0)) throw InputError("p = " + format_probability(p) + " outside (0, 1]");
  }
  for (std::size_t r : config.r_values) {
    if (r < 1) throw InputError("r values must be >= 1");
    const std::size_t largest = config.even_order ? 2 * r : 2 * r - 1;
    if (largest > max_order) {
      throw InputError("r = " + std::to_string(r) + " needs graphs on " + std::to_string(largest) +
                       " nodes, above the certifier limit of " + std::to_string(max_order));
    }
  }
}

std::uint64_t derive_seed(std::uint64_t master, std::size_t r, std::size_t n, double p,
                          std::size_t attempt) {
  const auto p_key = static_cast<std::uint64_t>(std::llround(p * 1e6));
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ r);
  h = splitmix64(h ^ n);
  h = splitmix64(h ^ p_key);
  return splitmix64(h ^ attempt);
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  validate(config, certifier_limit());

  std::vector<Cell> cells;
  for (std::size_t r : config.r_values) {
    for (std::size_t n : {2 * r - 1, 2 * r}) {
      if ((n % 2 == 1 && !config.odd_order) || (n % 2 == 0 && !config.even_order)) continue;
      for (double p : config.p_values) cells.push_back({r, n, p});
    }
  }

  // Cells are independent; results land in per-cell slots so the output does
  // not depend on scheduling.
  std::vector<std::vector<ExperimentRecord>> slots(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        slots[i] = run_cell(config, cells[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::size_t workers = config.workers != 0 ? config.workers : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(cells.size(), 1));
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  ExperimentResult result;
  for (auto& slot : slots) {
    result.records.insert(result.records.end(), slot.begin(), slot.end());
  }
  std::stable_sort(result.records.begin(), result.records.end(),
                   [](const ExperimentRecord& a, const ExperimentRecord& b) {
                     return std::tie(a.r, a.n, a.p, a.attempt) < std::tie(b.r, b.n, b.p, b.attempt);
                   });

  for (std::size_t r : config.r_values) {
    for (std::size_t n : {2 * r - 1, 2 * r}) {
      if ((n % 2 == 1 && !config.odd_order) || (n % 2 == 0 && !config.even_order)) continue;
      SummaryRow row;
      row.r = r;
      row.n = n;
      row.bound = edge_lower_bound(n, r).bound;
      row.target = config.samples_per_p * config.p_values.size();
      for (const auto& rec : result.records) {
        if (rec.r != r || rec.n != n || !rec.accepted) continue;
        ++row.accepted;
        row.min_edges_found = std::min(row.min_edges_found.value_or(rec.edge_count), rec.edge_count);
      }
      if (row.min_edges_found) {
        row.gap = static_cast<long long>(*row.min_edges_found) - static_cast<long long>(row.bound);
      }
      row.shortfall = row.target - std::min(row.target, row.accepted);
      result.summary.push_back(row);
    }
  }
  std::sort(result.summary.begin(), result.summary.end(), [](const SummaryRow& a, const SummaryRow& b) {
    return std::tie(a.r, a.n) < std::tie(b.r, b.n);
  });
  return result;
}

void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << "r,n,p,attempt,seed,edge_count,r_max,accepted\n";
  for (const auto& rec : records) {
    out << rec.r << ',' << rec.n << ',' << format_probability(rec.p) << ',' << rec.attempt << ','
        << rec.seed << ',' << rec.edge_count << ',' << rec.r_max << ','
        << (rec.accepted ? "true" : "false") << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "r,n,min_edges_found,bound,gap,accepted,target,shortfall\n";
  for (const auto& row : rows) {
    out << row.r << ',' << row.n << ',';
    if (row.min_edges_found) out << *row.min_edges_found;
    out << ',' << row.bound << ',';
    if (row.gap) out << *row.gap;
    out << ',' << row.accepted << ',' << row.target << ',' << row.shortfall << '\n';
  }
}

}  // namespace robustnet
