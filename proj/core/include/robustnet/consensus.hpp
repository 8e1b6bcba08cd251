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
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "robustnet/graph.hpp"

namespace robustnet {

enum class ThreatScope { kTotal, kLocal };

std::string to_string(ThreatScope scope);
ThreatScope parse_threat_scope(const std::string& s);

// Value a malicious agent broadcasts to every neighbour at step t.
using Behavior = std::function<double(std::size_t t)>;

Behavior constant_behavior(double value);
Behavior ramp_behavior(double start, double slope);
Behavior sinusoid_behavior(double offset, double amplitude, double period, double phase = 0.0);
// start + step * (sum of t independent +/-1 signs); reproducible from seed.
Behavior random_walk_behavior(double start, double step, std::uint64_t seed);

// JSON forms:
//   {"kind": "constant", "value": v}
//   {"kind": "ramp", "start": a, "slope": b}
//   {"kind": "sinusoid", "offset": c, "amplitude": A, "period": P, "phase": phi}
//   {"kind": "random-walk", "start": a, "step": s, "seed": k}
Behavior behavior_from_json(const nlohmann::json& j);

struct ThreatModel {
  ThreatScope scope = ThreatScope::kLocal;
  std::size_t budget = 0;  // F
  NodeSet malicious;
  std::map<Vertex, Behavior> behaviors;
};

// Throws InputError naming the violated condition: F-total size budget,
// F-local neighbourhood budget, or a malicious vertex without a behaviour.
void validate(const Graph& g, const ThreatModel& threat);

// Uniform-weight average of each agent's own value and its neighbours' values.
std::vector<double> nominal_step(const Graph& g, std::span<const double> states);

// One synchronous W-MSR update. Each agent in `normal` discards up to F
// neighbour values strictly above its own (largest first) and up to F strictly
// below (smallest first), then averages its own value with what is left.
// Agents outside `normal` keep their current value.
std::vector<double> wmsr_step(const Graph& g, std::span<const double> states, std::size_t f,
                              const NodeSet& normal);

struct SimulationOptions {
  std::size_t max_steps = 500;
  double tolerance = 1e-6;
};

struct SimulationTrace {
  // states[t][i]: value agent i broadcasts at step t. states[0] is the
  // supplied initial vector; later malicious entries come from behaviors.
  std::vector<std::vector<double>> states;
  NodeSet normal;
  std::optional<double> consensus_value;
  std::optional<std::size_t> converged_at;
  std::pair<double, double> safety_interval{0.0, 0.0};
};

// Runs W-MSR with parameter threat.budget until the spread of normal states
// falls below tolerance or max_steps updates have been applied.
SimulationTrace simulate(const Graph& g, const ThreatModel& threat, std::span<const double> initial,
                         const SimulationOptions& options = {});

struct Verdict {
  bool agreement = false;
  bool validity = false;
  double final_disagreement = 0.0;

  bool ok() const { return agreement && validity; }
};

Verdict check_validity(const SimulationTrace& trace, const NodeSet& normal, double tol);

// Spread (max - min) of the given agents' values.
double disagreement(std::span<const double> states, const NodeSet& agents);

// "t,agent_0,...,agent_{n-1}" then one row per recorded step.
void write_trace_csv(std::ostream& out, const SimulationTrace& trace);
nlohmann::json trace_summary_json(const SimulationTrace& trace, const NodeSet& malicious);

}  // namespace robustnet
