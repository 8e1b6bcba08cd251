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

#include <algorithm>
#include <random>
#include <sstream>

#include "random_graphs.hpp"
#include "robustnet/consensus.hpp"
#include "robustnet/construct.hpp"
#include "robustnet/error.hpp"
#include "trials.hpp"

using namespace robustnet;

namespace {

ThreatModel no_threat(std::size_t n, std::size_t f = 0) {
  return {ThreatScope::kLocal, f, NodeSet(n), {}};
}

Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, edges);
}

}  // namespace

TEST_CASE("nominal step") {
  const std::vector<double> flat{4.0, 4.0, 4.0};
  CHECK(nominal_step(complete_graph(3), flat) == flat);
  CHECK(nominal_step(Graph(2, {{0, 1}}), std::vector<double>{0.0, 10.0}) ==
        std::vector<double>{5.0, 5.0});
  const auto path = nominal_step(path_graph(3), std::vector<double>{0.0, 3.0, 9.0});
  CHECK(path[0] == doctest::Approx(1.5));
  CHECK(path[1] == doctest::Approx(4.0));
  CHECK(path[2] == doctest::Approx(6.0));
  CHECK_THROWS_AS(nominal_step(path_graph(3), std::vector<double>{1.0}), InputError);
}

TEST_CASE("wmsr step") {
  const Graph g = star(3);
  const std::vector<double> x{5.0, 1.0, 3.0, 9.0};
  const auto next = wmsr_step(g, x, 1, NodeSet::of(4, {0}));
  CHECK(next[0] == doctest::Approx(4.0));
  // agents outside the normal set are untouched
  CHECK(next[1] == 1.0);
  CHECK(next[3] == 9.0);

  // F = 0 is the nominal rule
  std::mt19937 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph h = testing::random_graph(rng, 8, 0.5);
    std::vector<double> y(8);
    for (double& v : y) v = std::uniform_real_distribution<double>(-5, 5)(rng);
    const auto a = wmsr_step(h, y, 0, h.vertices());
    const auto b = nominal_step(h, y);
    for (std::size_t i = 0; i < 8; ++i) CHECK(a[i] == doctest::Approx(b[i]));
  }

  // ties with the own value are never removed
  const std::vector<double> equal{2.0, 2.0, 2.0, 2.0};
  CHECK(wmsr_step(g, equal, 3, g.vertices()) == equal);

  // fewer than F values above: all of them go
  const auto capped = wmsr_step(g, std::vector<double>{5.0, 6.0, 5.0, 5.0}, 2, NodeSet::of(4, {0}));
  CHECK(capped[0] == doctest::Approx(5.0));
}

TEST_CASE("threat model validation") {
  const Graph g = complete_graph(5);
  ThreatModel total{ThreatScope::kTotal, 1, NodeSet::of(5, {0, 1}), {}};
  total.behaviors[0] = constant_behavior(1.0);
  total.behaviors[1] = constant_behavior(1.0);
  CHECK_THROWS_WITH_AS(validate(g, total), doctest::Contains("F-total"), InputError);

  ThreatModel local{ThreatScope::kLocal, 1, NodeSet::of(5, {0, 1}), {}};
  local.behaviors = total.behaviors;
  CHECK_THROWS_WITH_AS(validate(g, local), doctest::Contains("F-local"), InputError);

  ThreatModel missing{ThreatScope::kLocal, 2, NodeSet::of(5, {0, 1}), {}};
  missing.behaviors[0] = constant_behavior(1.0);
  CHECK_THROWS_WITH_AS(validate(g, missing), doctest::Contains("no behavior"), InputError);

  local.budget = 2;
  CHECK_NOTHROW(validate(g, local));

  // four malicious neighbours of vertex 12 in the (13,7) graph, F = 3
  const Graph odd = sparsest_odd(7);
  ThreatModel crowded{ThreatScope::kLocal, 3, NodeSet::of(13, {0, 1, 2, 3}), {}};
  for (Vertex m : crowded.malicious.members()) crowded.behaviors[m] = constant_behavior(500.0);
  CHECK_THROWS_WITH_AS(validate(odd, crowded), doctest::Contains("F-local"), InputError);
}

TEST_CASE("behaviors") {
  CHECK(constant_behavior(3.0)(17) == 3.0);
  CHECK(ramp_behavior(1.0, 2.0)(3) == 7.0);
  CHECK(sinusoid_behavior(1.0, 2.0, 4.0)(1) == doctest::Approx(3.0));
  const Behavior walk = random_walk_behavior(0.0, 1.0, 9);
  CHECK(walk(0) == 0.0);
  CHECK(std::abs(walk(1)) == 1.0);
  CHECK(walk(25) == random_walk_behavior(0.0, 1.0, 9)(25));
  CHECK(behavior_from_json(R"({"kind":"ramp","start":1,"slope":2})"_json)(3) == 7.0);
  CHECK(behavior_from_json(R"({"kind":"constant","value":-4})"_json)(0) == -4.0);
  CHECK_THROWS_AS(behavior_from_json(R"({"kind":"teleport"})"_json), InputError);
  CHECK_THROWS_AS(behavior_from_json(R"({"kind":"constant"})"_json), InputError);
}

TEST_CASE("nominal simulation agrees inside the initial hull") {
  const Graph g = path_graph(6);
  const std::vector<double> x{-3.0, 8.0, 1.0, 0.5, 7.0, -9.0};
  const auto trace = simulate(g, no_threat(6), x);
  CHECK(trace.states.front() == x);
  REQUIRE(trace.converged_at.has_value());
  CHECK(trace.safety_interval.first == -9.0);
  CHECK(trace.safety_interval.second == 8.0);
  CHECK(*trace.consensus_value >= -9.0);
  CHECK(*trace.consensus_value <= 8.0);
  CHECK(check_validity(trace, trace.normal, 1e-6).ok());

  const auto flat = simulate(g, no_threat(6), std::vector<double>(6, 2.5));
  CHECK(flat.converged_at == 0U);
  CHECK(flat.states.size() == 1);
  CHECK(check_validity(flat, flat.normal, 1e-6).ok());
}

TEST_CASE("two normal agents on a triangle shed a loud neighbour") {
  const Graph g = complete_graph(3);
  ThreatModel threat{ThreatScope::kLocal, 1, NodeSet::of(3, {2}), {}};
  threat.behaviors[2] = constant_behavior(1000.0);
  const auto trace = simulate(g, threat, std::vector<double>{10.0, 0.0, 1000.0});
  // Agent 0 drops both neighbours; agent 1 drops 1000 and moves halfway to 10.
  CHECK(trace.states[1][0] == 10.0);
  CHECK(trace.states[1][1] == doctest::Approx(5.0));
  CHECK(trace.states[2][1] == doctest::Approx(7.5));
  REQUIRE(trace.converged_at.has_value());
  CHECK(*trace.consensus_value == doctest::Approx(10.0).epsilon(1e-6));
  CHECK(check_validity(trace, trace.normal, 1e-6).ok());
}

TEST_CASE("under-robust graph: verdict reports instead of throwing") {
  const Graph c4 = cycle_graph(4);
  ThreatModel threat{ThreatScope::kLocal, 1, NodeSet::of(4, {0}), {}};
  threat.behaviors[0] = ramp_behavior(0.0, 5.0);
  const auto trace = simulate(c4, threat, std::vector<double>{0.0, -10.0, 0.0, 10.0},
                              {.max_steps = 200, .tolerance = 1e-6});
  Verdict verdict;
  CHECK_NOTHROW(verdict = check_validity(trace, trace.normal, 1e-6));
  CHECK_FALSE(verdict.agreement);
  CHECK(verdict.final_disagreement > 1.0);
}

TEST_CASE("normal states stay inside what they could see") {
  std::mt19937 graph_rng(5);
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::random_graph(graph_rng, 9, 0.5);
    ThreatModel threat{ThreatScope::kTotal, 2, NodeSet::of(9, {1, 6}), {}};
    threat.behaviors[1] = sinusoid_behavior(0.0, 300.0, 7.0);
    threat.behaviors[6] = random_walk_behavior(50.0, 20.0, trial);
    std::vector<double> x(9);
    for (double& v : x) v = std::uniform_real_distribution<double>(-100, 100)(rng);
    const auto trace = simulate(g, threat, x, {.max_steps = 60, .tolerance = 1e-9});
    for (std::size_t t = 0; t + 1 < trace.states.size(); ++t) {
      const auto& prev = trace.states[t];
      for (Vertex i : trace.normal.members()) {
        double lo = prev[i];
        double hi = prev[i];
        for (Vertex j : g.neighbors(i).members()) {
          lo = std::min(lo, prev[j]);
          hi = std::max(hi, prev[j]);
        }
        CHECK(trace.states[t + 1][i] >= lo - 1e-12);
        CHECK(trace.states[t + 1][i] <= hi + 1e-12);
      }
    }
  }
}

TEST_CASE("resilient at r = 2F+1 on the constructions") {
  std::mt19937_64 rng(314);
  for (std::size_t f : {1U, 2U}) {
    const std::size_t r = 2 * f + 1;
    for (const Graph& g : {sparsest_odd(r), sparsest_even(r)}) {
      for (int trial = 0; trial < 100; ++trial) {
        const auto setup = testing::random_constant_trial(g, f, rng);
        const auto trace = simulate(g, setup.threat, setup.initial);
        const Verdict verdict = check_validity(trace, trace.normal, 1e-6);
        CHECK(verdict.agreement);
        CHECK(verdict.validity);
      }
    }
  }
}

TEST_CASE("relabeling agents permutes the trace") {
  const Graph g = sparsest_even(3);
  const std::vector<Vertex> perm{4, 2, 5, 0, 1, 3};
  const Graph h = g.relabeled(perm);
  ThreatModel threat{ThreatScope::kLocal, 1, NodeSet::of(6, {1}), {}};
  threat.behaviors[1] = ramp_behavior(200.0, -3.0);
  ThreatModel moved{ThreatScope::kLocal, 1, NodeSet::of(6, {perm[1]}), {}};
  moved.behaviors[perm[1]] = ramp_behavior(200.0, -3.0);
  const std::vector<double> x{10.0, 200.0, -40.0, 33.0, 7.0, -2.0};
  std::vector<double> y(6);
  for (Vertex v = 0; v < 6; ++v) y[perm[v]] = x[v];

  const auto a = simulate(g, threat, x);
  const auto b = simulate(h, moved, y);
  REQUIRE(a.states.size() == b.states.size());
  for (std::size_t t = 0; t < a.states.size(); ++t) {
    for (Vertex v = 0; v < 6; ++v) CHECK(b.states[t][perm[v]] == doctest::Approx(a.states[t][v]));
  }
}

TEST_CASE("affine change of units transforms the trace") {
  const Graph g = sparsest_odd(4);
  const double scale = 2.5;
  const double shift = -7.0;
  ThreatModel threat{ThreatScope::kLocal, 1, NodeSet::of(7, {3}), {}};
  const Behavior wave = sinusoid_behavior(20.0, 150.0, 11.0);
  threat.behaviors[3] = wave;
  ThreatModel mapped = threat;
  mapped.behaviors[3] = [=](std::size_t t) { return scale * wave(t) + shift; };

  std::vector<double> x{-60.0, 12.0, 99.0, wave(0), -3.0, 45.0, 0.0};
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = scale * x[i] + shift;

  const SimulationOptions opts{.max_steps = 80, .tolerance = 1e-12};
  const auto a = simulate(g, threat, x, opts);
  const auto b = simulate(g, mapped, y, opts);
  const std::size_t steps = std::min(a.states.size(), b.states.size());
  for (std::size_t t = 0; t < steps; ++t) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK(std::abs(b.states[t][i] - (scale * a.states[t][i] + shift)) < 1e-9);
    }
  }
}

TEST_CASE("trace export") {
  ThreatModel threat{ThreatScope::kLocal, 1, NodeSet::of(3, {2}), {}};
  threat.behaviors[2] = constant_behavior(1000.0);
  const auto trace = simulate(complete_graph(3), threat, std::vector<double>{10.0, 0.0, 1000.0},
                              {.max_steps = 2, .tolerance = 1e-6});
  std::ostringstream csv;
  write_trace_csv(csv, trace);
  CHECK(csv.str() == "t,agent_0,agent_1,agent_2\n0,10,0,1000\n1,10,5,1000\n2,10,7.5,1000\n");

  const auto j = trace_summary_json(trace, threat.malicious);
  CHECK(j["normal"] == nlohmann::json::array({0, 1}));
  CHECK(j["malicious"] == nlohmann::json::array({2}));
  CHECK(j["converged_at"].is_null());
  CHECK(j["consensus_value"].is_null());
  CHECK(j["safety_interval"] == nlohmann::json::array({0.0, 10.0}));
}

TEST_CASE("simulate rejects bad input") {
  const Graph g = complete_graph(3);
  CHECK_THROWS_AS(simulate(g, no_threat(3), std::vector<double>{1.0, 2.0}), InputError);
  CHECK_THROWS_AS(simulate(g, no_threat(3), std::vector<double>{1, 2, 3}, {.max_steps = 0}),
                  InputError);
  CHECK_THROWS_AS(
      simulate(g, no_threat(3), std::vector<double>{1, 2, 3}, {.max_steps = 5, .tolerance = 0.0}),
      InputError);
}
