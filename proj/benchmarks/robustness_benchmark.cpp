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

#include <benchmark/benchmark.h>

#include "robustnet/construct.hpp"
#include "robustnet/graph.hpp"
#include "robustnet/robustness.hpp"

namespace {

using namespace robustnet;

void BM_MaxRobustnessSparsestEven(benchmark::State& state) {
  const Graph g = sparsest_even(static_cast<std::size_t>(state.range(0)));
  std::uint64_t pairs = 0;
  for (auto _ : state) {
    const auto cert = max_robustness(g);
    pairs = cert.pairs_examined;
    benchmark::DoNotOptimize(cert.r_max);
  }
  state.counters["n"] = static_cast<double>(g.order());
  state.counters["pairs"] = static_cast<double>(pairs);
}
BENCHMARK(BM_MaxRobustnessSparsestEven)->DenseRange(3, 8)->Unit(benchmark::kMicrosecond);

void BM_MaxRobustnessRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const Graph g = erdos_renyi(n, 0.8, seed++);
    benchmark::DoNotOptimize(max_robustness(g).r_max);
  }
}
BENCHMARK(BM_MaxRobustnessRandom)->DenseRange(8, 16, 2)->Unit(benchmark::kMicrosecond);

void BM_MaxClique(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = erdos_renyi(n, 0.5, 42);
  for (auto _ : state) benchmark::DoNotOptimize(max_clique(g).bits());
}
BENCHMARK(BM_MaxClique)->RangeMultiplier(2)->Range(8, 64);

void BM_DensestSubset(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const Graph g = sparsest_even(r);
  for (auto _ : state) benchmark::DoNotOptimize(densest_subset_of_size(g, r + 1).second);
}
BENCHMARK(BM_DensestSubset)->DenseRange(3, 8);

}  // namespace
