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

#include "robustnet/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "robustnet/error.hpp"

namespace robustnet {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_length(const Graph& g, std::span<const double> states) {
  if (states.size() != g.order()) {
    throw InputError("state vector has " + std::to_string(states.size()) + " entries for " +
                     std::to_string(g.order()) + " agents");
  }
}

double number(const nlohmann::json& j, const char* key, double fallback) {
  return j.contains(key) ? j.at(key).get<double>() : fallback;
}

}  // namespace

std::string to_string(ThreatScope scope) {
  return scope == ThreatScope::kTotal ? "total" : "local";
}

ThreatScope parse_threat_scope(const std::string& s) {
  if (s == "total" || s == "F-total") return ThreatScope::kTotal;
  if (s == "local" || s == "F-local") return ThreatScope::kLocal;
  throw InputError("unknown threat scope '" + s + "' (expected total or local)");
}

Behavior constant_behavior(double value) {
  return [value](std::size_t) { return value; };
}

Behavior ramp_behavior(double start, double slope) {
  return [start, slope](std::size_t t) { return start + slope * static_cast<double>(t); };
}

Behavior sinusoid_behavior(double offset, double amplitude, double period, double phase) {
  if (!(period > 0.0)) throw InputError("sinusoid period must be positive");
  return [=](std::size_t t) {
    return offset + amplitude * std::sin(2.0 * std::numbers::pi * static_cast<double>(t) / period + phase);
  };
}

Behavior random_walk_behavior(double start, double step, std::uint64_t seed) {
  return [=](std::size_t t) {
    long long position = 0;
    for (std::size_t k = 0; k < t; ++k) {
      position += (splitmix64(seed ^ splitmix64(k)) & 1U) != 0 ? 1 : -1;
    }
    return start + step * static_cast<double>(position);
  };
}

Behavior behavior_from_json(const nlohmann::json& j) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "constant") return constant_behavior(j.at("value").get<double>());
    if (kind == "ramp") return ramp_behavior(number(j, "start", 0.0), j.at("slope").get<double>());
    if (kind == "sinusoid") {
      return sinusoid_behavior(number(j, "offset", 0.0), j.at("amplitude").get<double>(),
                               j.at("period").get<double>(), number(j, "phase", 0.0));
    }
    if (kind == "random-walk") {
      return random_walk_behavior(number(j, "start", 0.0), j.at("step").get<double>(),
                                  j.value("seed", std::uint64_t{0}));
    }
    throw InputError("unknown behavior kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed behavior JSON: ") + e.what());
  }
}

void validate(const Graph& g, const ThreatModel& threat) {
  if (threat.malicious.universe() != g.order()) {
    throw InputError("malicious set does not belong to a graph on " + std::to_string(g.order()) +
                     " vertices");
  }
  if (threat.malicious.size() == g.order()) throw InputError("threat model leaves no normal agents");
  for (Vertex m : threat.malicious.members()) {
    if (!threat.behaviors.contains(m) || !threat.behaviors.at(m)) {
      throw InputError("malicious vertex " + std::to_string(m) + " has no behavior");
    }
  }
  if (threat.scope == ThreatScope::kTotal) {
    if (threat.malicious.size() > threat.budget) {
      throw InputError("F-total violated: " + std::to_string(threat.malicious.size()) +
                       " malicious agents exceed F = " + std::to_string(threat.budget));
    }
    return;
  }
  for (Vertex v : threat.malicious.complement().members()) {
    const std::size_t bad = (g.neighbors(v) & threat.malicious).size();
    if (bad > threat.budget) {
      throw InputError("F-local violated: normal vertex " + std::to_string(v) + " has " +
                       std::to_string(bad) + " malicious neighbors, exceeding F = " +
                       std::to_string(threat.budget));
    }
  }
}

std::vector<double> nominal_step(const Graph& g, std::span<const double> states) {
  check_length(g, states);
  std::vector<double> next(states.size());
  for (Vertex i = 0; i < g.order(); ++i) {
    double sum = states[i];
    const auto nbrs = g.neighbors(i).members();
    for (Vertex j : nbrs) sum += states[j];
    next[i] = sum / static_cast<double>(nbrs.size() + 1);
  }
  return next;
}

std::vector<double> wmsr_step(const Graph& g, std::span<const double> states, std::size_t f,
                              const NodeSet& normal) {
  check_length(g, states);
  std::vector<double> next(states.begin(), states.end());
  std::vector<std::pair<double, Vertex>> above;
  std::vector<std::pair<double, Vertex>> below;
  for (Vertex i : normal.members()) {
    const double own = states[i];
    double sum = own;
    std::size_t kept = 1;
    above.clear();
    below.clear();
    for (Vertex j : g.neighbors(i).members()) {
      const double v = states[j];
      if (v > own) {
        above.emplace_back(v, j);
      } else if (v < own) {
        below.emplace_back(v, j);
      } else {
        sum += v;
        ++kept;
      }
    }
    // Largest first (ties by ascending index) for the upper side, smallest
    // first for the lower side; the first F entries of each are dropped.
    std::sort(above.begin(), above.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    std::sort(below.begin(), below.end());
    for (std::size_t k = f; k < above.size(); ++k, ++kept) sum += above[k].first;
    for (std::size_t k = f; k < below.size(); ++k, ++kept) sum += below[k].first;
    next[i] = sum / static_cast<double>(kept);
  }
  return next;
}

double disagreement(std::span<const double> states, const NodeSet& agents) {
  if (agents.empty()) return 0.0;
  double lo = states[agents.members().front()];
  double hi = lo;
  for (Vertex v : agents.members()) {
    lo = std::min(lo, states[v]);
    hi = std::max(hi, states[v]);
  }
  return hi - lo;
}

SimulationTrace simulate(const Graph& g, const ThreatModel& threat, std::span<const double> initial,
                         const SimulationOptions& options) {
  validate(g, threat);
  check_length(g, initial);
  if (options.max_steps < 1) throw InputError("simulation needs at least one step");
  if (!(options.tolerance > 0.0)) throw InputError("tolerance must be positive");

  SimulationTrace trace;
  trace.normal = threat.malicious.complement();
  const auto normal_members = trace.normal.members();
  double lo = initial[normal_members.front()];
  double hi = lo;
  for (Vertex v : normal_members) {
    lo = std::min(lo, initial[v]);
    hi = std::max(hi, initial[v]);
  }
  trace.safety_interval = {lo, hi};

  auto settle = [&](std::size_t t) {
    const auto& x = trace.states.back();
    if (disagreement(x, trace.normal) >= options.tolerance) return false;
    double sum = 0.0;
    for (Vertex v : normal_members) sum += x[v];
    trace.converged_at = t;
    trace.consensus_value = sum / static_cast<double>(normal_members.size());
    return true;
  };

  trace.states.emplace_back(initial.begin(), initial.end());
  if (settle(0)) return trace;
  for (std::size_t t = 0; t < options.max_steps; ++t) {
    auto next = wmsr_step(g, trace.states.back(), threat.budget, trace.normal);
    for (const auto& [m, behavior] : threat.behaviors) {
      if (threat.malicious.contains(m)) next[m] = behavior(t + 1);
    }
    trace.states.push_back(std::move(next));
    if (settle(t + 1)) break;
  }
  return trace;
}

Verdict check_validity(const SimulationTrace& trace, const NodeSet& normal, double tol) {
  Verdict verdict;
  verdict.agreement = trace.converged_at.has_value();
  verdict.validity = true;
  const auto [lo, hi] = trace.safety_interval;
  for (const auto& row : trace.states) {
    for (Vertex v : normal.members()) {
      if (row[v] < lo - tol || row[v] > hi + tol) verdict.validity = false;
    }
  }
  if (!trace.states.empty()) verdict.final_disagreement = disagreement(trace.states.back(), normal);
  return verdict;
}

void write_trace_csv(std::ostream& out, const SimulationTrace& trace) {
  const std::size_t n = trace.states.empty() ? 0 : trace.states.front().size();
  out << 't';
  for (std::size_t i = 0; i < n; ++i) out << ",agent_" << i;
  out << '\n';
  for (std::size_t t = 0; t < trace.states.size(); ++t) {
    out << t;
    for (double v : trace.states[t]) out << ',' << format_double(v);
    out << '\n';
  }
}

nlohmann::json trace_summary_json(const SimulationTrace& trace, const NodeSet& malicious) {
  nlohmann::json j;
  j["normal"] = trace.normal.members();
  j["malicious"] = malicious.members();
  j["converged_at"] = trace.converged_at ? nlohmann::json(*trace.converged_at) : nlohmann::json();
  j["consensus_value"] =
      trace.consensus_value ? nlohmann::json(*trace.consensus_value) : nlohmann::json();
  j["safety_interval"] = {trace.safety_interval.first, trace.safety_interval.second};
  return j;
}

}  // namespace robustnet
