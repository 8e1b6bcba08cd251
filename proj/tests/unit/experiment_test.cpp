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

#include <sstream>

#include "robustnet/error.hpp"
#include "robustnet/experiment.hpp"
#include "robustnet/robustness.hpp"

using namespace robustnet;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig config;
  config.r_values = {1, 2, 3};
  config.samples_per_p = 4;
  config.p_values = {0.8, 0.9};
  config.master_seed = 7;
  config.workers = 2;
  return config;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_NOTHROW(validate(small_config(), 16));
  auto bad = small_config();
  bad.samples_per_p = 0;
  CHECK_THROWS_AS(validate(bad, 16), InputError);
  bad = small_config();
  bad.p_values = {0.0};
  CHECK_THROWS_AS(validate(bad, 16), InputError);
  bad = small_config();
  bad.p_values = {1.2};
  CHECK_THROWS_AS(validate(bad, 16), InputError);
  bad = small_config();
  bad.r_values = {9};
  CHECK_THROWS_AS(validate(bad, 16), InputError);
  bad.even_order = false;
  CHECK_NOTHROW(validate(bad, 17));
  bad.odd_order = false;
  CHECK_THROWS_AS(validate(bad, 64), InputError);
  bad = small_config();
  bad.r_values = {0};
  CHECK_THROWS_AS(validate(bad, 16), InputError);
}

TEST_CASE("seed derivation is stable and separates cells") {
  CHECK(derive_seed(1, 2, 3, 0.9, 0) == derive_seed(1, 2, 3, 0.9, 0));
  CHECK(derive_seed(1, 2, 3, 0.9, 0) != derive_seed(1, 2, 3, 0.9, 1));
  CHECK(derive_seed(1, 2, 3, 0.9, 0) != derive_seed(1, 2, 4, 0.9, 0));
  CHECK(derive_seed(1, 2, 3, 0.9, 0) != derive_seed(1, 2, 3, 0.85, 0));
  CHECK(derive_seed(1, 2, 3, 0.9, 0) != derive_seed(2, 2, 3, 0.9, 0));
}

TEST_CASE("small sweep") {
  const auto result = run_experiment(small_config());
  REQUIRE(result.summary.size() == 6);
  for (const auto& rec : result.records) {
    CHECK(rec.accepted == (rec.r_max == rec.r));
    if (rec.accepted) CHECK(rec.edge_count >= edge_lower_bound(rec.n, rec.r).bound);
  }
  for (const auto& row : result.summary) {
    CHECK(row.target == 8);
    CHECK(row.shortfall == 0);
    REQUIRE(row.min_edges_found.has_value());
    CHECK(*row.gap >= 0);
  }
  // The triangle is the only 2-robust graph on three nodes.
  CHECK(result.summary[2].r == 2);
  CHECK(result.summary[2].n == 3);
  CHECK(*result.summary[2].min_edges_found == 3);
  CHECK(result.summary[2].bound == 3);
}

TEST_CASE("records are canonical and replayable") {
  auto config = small_config();
  std::ostringstream a;
  std::ostringstream b;
  write_records_csv(a, run_experiment(config).records);
  config.workers = 1;
  write_records_csv(b, run_experiment(config).records);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("r,n,p,attempt,seed,edge_count,r_max,accepted\n", 0) == 0);
}

TEST_CASE("attempt cap reports a shortfall") {
  ExperimentConfig config;
  config.r_values = {4};
  config.p_values = {0.7};
  config.samples_per_p = 50;
  config.max_attempts = 3;
  config.odd_order = false;
  const auto result = run_experiment(config);
  REQUIRE(result.summary.size() == 1);
  CHECK(result.records.size() == 3);
  CHECK(result.summary[0].shortfall == 50 - result.summary[0].accepted);
  std::ostringstream out;
  write_summary_csv(out, result.summary);
  CHECK(out.str().rfind("r,n,min_edges_found,bound,gap,accepted,target,shortfall\n", 0) == 0);
}
