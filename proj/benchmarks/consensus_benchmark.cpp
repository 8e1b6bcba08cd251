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

#include <vector>

#include "robustnet/consensus.hpp"
#include "robustnet/construct.hpp"

namespace {

using namespace robustnet;

void BM_WmsrStep(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const Graph g = sparsest_even(r);
  std::vector<double> x(g.order());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<double>((i * 37) % 101) - 50.0;
  const NodeSet normal = g.vertices();
  for (auto _ : state) benchmark::DoNotOptimize(wmsr_step(g, x, (r - 1) / 2, normal));
}
BENCHMARK(BM_WmsrStep)->DenseRange(3, 15, 4);

void BM_SimulateFigureScale(benchmark::State& state) {
  const Graph g = sparsest_odd(7);
  ThreatModel threat{ThreatScope::kLocal, 3, NodeSet::of(13, {0, 7, 12}), {}};
  for (Vertex m : threat.malicious.members()) threat.behaviors[m] = constant_behavior(500.0);
  std::vector<double> x(13);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = -90.0 + 15.0 * static_cast<double>(i);
  for (Vertex m : threat.malicious.members()) x[m] = 500.0;
  for (auto _ : state) benchmark::DoNotOptimize(simulate(g, threat, x).converged_at);
}
BENCHMARK(BM_SimulateFigureScale)->Unit(benchmark::kMicrosecond);

}  // namespace
