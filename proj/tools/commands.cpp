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

#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "robustnet/consensus.hpp"
#include "robustnet/error.hpp"
#include "robustnet/graph_io.hpp"
#include "robustnet/robustness.hpp"

namespace robustnet::cli {
namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path.string());
  file << contents;
}

nlohmann::json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string bound_line(const Graph& g, std::size_t r) {
  const BoundReport bound = edge_lower_bound(g.order(), r);
  std::ostringstream line;
  line << "edges " << g.edge_count() << " vs lower bound " << bound.bound << " ("
       << to_string(bound.kind) << ")";
  return line.str();
}

// Normal agents start uniformly on [-100, 100]; malicious agents start at
// their behavior's t = 0 value.
std::vector<double> initial_states(const ThreatModel& threat, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    x[i] = -100.0 + 200.0 * u;
  }
  for (const auto& [m, behavior] : threat.behaviors) x[m] = behavior(0);
  return x;
}

ThreatModel threat_from_json(const nlohmann::json& j, const Graph& g) {
  try {
    ThreatModel threat;
    threat.scope = parse_threat_scope(j.at("scope").get<std::string>());
    threat.budget = j.at("F").get<std::size_t>();
    const auto members = j.at("malicious").get<std::vector<std::size_t>>();
    threat.malicious = NodeSet::of(g.order(), members);
    std::optional<Behavior> fallback;
    if (j.contains("behavior")) fallback = behavior_from_json(j["behavior"]);
    for (Vertex m : members) {
      const std::string key = std::to_string(m);
      if (j.contains("behaviors") && j["behaviors"].contains(key)) {
        threat.behaviors[m] = behavior_from_json(j["behaviors"][key]);
      } else if (fallback) {
        threat.behaviors[m] = *fallback;
      }
    }
    return threat;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed threat spec: ") + e.what());
  }
}

}  // namespace

int cmd_construct(const ConstructionRecipe& recipe, const GlobalOptions& opts, std::ostream& out,
                  std::ostream& err) {
  try {
    const Graph g = build(recipe);
    const std::string body = opts.format == OutputFormat::kJson ? graph_to_json(g).dump() + "\n"
                                                                : format_edge_list(g);
    if (opts.output.empty()) {
      out << body;
    } else {
      write_file(opts.output, body);
    }
    if (!opts.quiet) {
      std::ostream& report = opts.output.empty() ? err : out;
      const std::size_t r = robustness_ceiling(g.order());
      const BoundReport bound = edge_lower_bound(g.order(), r);
      report << to_string(recipe.kind) << ": n " << g.order() << ", edges " << g.edge_count()
             << ", lower bound " << bound.bound << " at r = " << r << " (" << to_string(bound.kind)
             << ")\n";
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "construct: " << e.what() << '\n';
    return kExitInputError;
  }
}

int cmd_certify(const fs::path& graph_file, const GlobalOptions& opts, std::ostream& out,
                std::ostream& err) {
  try {
    const Graph g = read_graph_file(graph_file);
    const std::size_t limit = certifier_limit();
    if (g.order() > limit) {
      err << "certify: graph has " << g.order() << " nodes; certifier limit is " << limit
          << " (set ROBUSTNET_MAX_N to raise it)\n";
      return kExitInputError;
    }
    const RobustnessCertificate cert = max_robustness(g);
    nlohmann::json report = certificate_to_json(cert);
    if (!opts.output.empty()) write_file(opts.output, report.dump(2) + "\n");

    const std::size_t n = g.order();
    const std::size_t r = cert.r_max;
    if (opts.format == OutputFormat::kJson) {
      out << report.dump() << '\n';
      return kExitOk;
    }
    if (opts.quiet) return kExitOk;
    out << "n " << n << ", edges " << g.edge_count() << '\n';
    out << "r_max " << r << " (ceiling " << robustness_ceiling(n) << ")\n";
    if (cert.by_convention) {
      out << "note: single-vertex graph; r_max = ceil(n/2) by convention, no witness exists\n";
      return kExitOk;
    }
    if (cert.witness) {
      out << "witness: s1 {";
      const char* sep = "";
      for (Vertex v : cert.witness->first.members()) out << std::exchange(sep, ",") << v;
      out << "} s2 {";
      sep = "";
      for (Vertex v : cert.witness->second.members()) out << std::exchange(sep, ",") << v;
      out << "}\n";
    }
    if (r >= 1) out << bound_line(g, r) << '\n';
    if (r >= 1 && (n + 1 == 2 * r || n == 2 * r)) {
      for (const LemmaResult& lemma : check_structural_lemmas(g, r).results) {
        out << "lemma " << lemma.name << ": " << (lemma.passed ? "pass" : "FAIL") << " (found "
            << lemma.found << ", need " << lemma.required << ")\n";
      }
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "certify: " << e.what() << '\n';
    return kExitInputError;
  }
}

int cmd_simulate(const SimulateArgs& args, const GlobalOptions& opts, std::ostream& out,
                 std::ostream& err) {
  Verdict verdict;
  try {
    const Graph g = read_graph_file(args.graph_file);
    const nlohmann::json spec = read_json_file(args.threat_spec);
    const ThreatModel threat = threat_from_json(spec, g);
    validate(g, threat);

    std::vector<double> initial;
    if (spec.contains("initial")) {
      initial = spec["initial"].get<std::vector<double>>();
    } else {
      initial = initial_states(threat, g.order(), opts.seed.value_or(0));
    }
    const SimulationTrace trace =
        simulate(g, threat, initial, {.max_steps = args.steps, .tolerance = args.tolerance});
    verdict = check_validity(trace, trace.normal, args.tolerance);

    const fs::path prefix = opts.output.empty() ? fs::path("trace") : opts.output;
    std::ostringstream csv;
    write_trace_csv(csv, trace);
    write_file(fs::path(prefix.string() + ".csv"), csv.str());
    nlohmann::json sidecar = trace_summary_json(trace, threat.malicious);
    sidecar["agreement"] = verdict.agreement;
    sidecar["validity"] = verdict.validity;
    sidecar["final_disagreement"] = verdict.final_disagreement;
    write_file(fs::path(prefix.string() + ".json"), sidecar.dump(2) + "\n");

    if (!opts.quiet) {
      out << "agreement " << (verdict.agreement ? "yes" : "no") << ", validity "
          << (verdict.validity ? "yes" : "no") << ", final disagreement "
          << verdict.final_disagreement;
      if (trace.converged_at) out << ", converged at t = " << *trace.converged_at;
      out << '\n';
    }
  } catch (const nlohmann::json::exception& e) {
    err << "simulate: malformed threat spec: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "simulate: " << e.what() << '\n';
    return kExitInputError;
  }
  return verdict.ok() ? kExitOk : kExitPropertyFailed;
}

int cmd_experiment(const ExperimentConfig& config, const GlobalOptions& opts, std::ostream& out,
                   std::ostream& err) {
  try {
    const ExperimentResult result = run_experiment(config);
    const fs::path dir = opts.output.empty() ? fs::path("experiment") : opts.output;
    std::ostringstream records;
    write_records_csv(records, result.records);
    write_file(dir / "records.csv", records.str());
    std::ostringstream summary;
    write_summary_csv(summary, result.summary);
    write_file(dir / "summary.csv", summary.str());
    if (opts.format == OutputFormat::kJson) {
      nlohmann::json rows = nlohmann::json::array();
      for (const SummaryRow& row : result.summary) {
        rows.push_back({{"r", row.r},
                        {"n", row.n},
                        {"min_edges_found", row.min_edges_found ? nlohmann::json(*row.min_edges_found)
                                                                : nlohmann::json()},
                        {"bound", row.bound},
                        {"gap", row.gap ? nlohmann::json(*row.gap) : nlohmann::json()},
                        {"accepted", row.accepted},
                        {"target", row.target},
                        {"shortfall", row.shortfall}});
      }
      write_file(dir / "summary.json", rows.dump(2) + "\n");
    }
    if (!opts.quiet) {
      out << summary.str();
      for (const SummaryRow& row : result.summary) {
        if (row.shortfall > 0) {
          err << "experiment: r=" << row.r << " n=" << row.n << " short by " << row.shortfall
              << " accepted graphs\n";
        }
      }
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "experiment: " << e.what() << '\n';
    return kExitInputError;
  }
}

int cmd_bounds(std::size_t r_min, std::size_t r_max, const GlobalOptions& opts, std::ostream& out,
               std::ostream& err) {
  if (r_min < 1 || r_min > r_max) {
    err << "bounds: need 1 <= r-min <= r-max\n";
    return kExitInputError;
  }
  nlohmann::json rows = nlohmann::json::array();
  if (opts.format == OutputFormat::kCsv) out << "n,r,bound,kind\n";
  for (std::size_t r = r_min; r <= r_max; ++r) {
    for (std::size_t n : {2 * r - 1, 2 * r}) {
      const BoundReport b = edge_lower_bound(n, r);
      if (opts.format == OutputFormat::kCsv) {
        out << b.n << ',' << b.r << ',' << b.bound << ',' << to_string(b.kind) << '\n';
      } else {
        rows.push_back({{"n", b.n}, {"r", b.r}, {"bound", b.bound}, {"kind", to_string(b.kind)}});
      }
    }
  }
  if (opts.format == OutputFormat::kJson) out << rows.dump() << '\n';
  return kExitOk;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, certify and stress-test maximally robust communication graphs",
               "robustnet"};
  app.require_subcommand(1);

  GlobalOptions opts;
  std::uint64_t seed = 0;
  std::string output;
  std::string format = "csv";
  auto* seed_opt = app.add_option("--seed", seed, "Seed (master seed for experiment)");
  app.add_option("--output,-o", output, "Output file, prefix or directory");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--quiet,-q", opts.quiet, "Suppress human-readable reports");

  // construct
  auto* construct = app.add_subcommand("construct", "Build a graph from a recipe");
  construct->fallthrough();
  std::string kind;
  std::string recipe_file;
  std::size_t r = 0;
  std::size_t n = 0;
  double p = 0.0;
  std::string tree_shape;
  auto* kind_opt = construct->add_option("--kind", kind,
                                         "sparsest-odd|sparsest-even|f-elemental|erdos-renyi|tree");
  auto* r_opt = construct->add_option("--r", r, "Robustness level");
  auto* n_opt = construct->add_option("--n", n, "Vertex count");
  auto* p_opt = construct->add_option("--p", p, "Edge probability (erdos-renyi)");
  auto* shape_opt = construct->add_option("--tree-shape", tree_shape, "path|star|random");
  auto* recipe_opt = construct->add_option("--recipe", recipe_file, "Recipe JSON file");
  recipe_opt->excludes(kind_opt);

  // certify
  auto* certify = app.add_subcommand("certify", "Compute exact maximum robustness");
  certify->fallthrough();
  std::string graph_file;
  certify->add_option("graph", graph_file, "Edge-list or JSON graph file")->required();

  // simulate
  auto* simulate_cmd = app.add_subcommand("simulate", "Run W-MSR under a threat model");
  simulate_cmd->fallthrough();
  SimulateArgs sim;
  std::string sim_graph;
  std::string threat_file;
  simulate_cmd->add_option("graph", sim_graph, "Edge-list or JSON graph file")->required();
  simulate_cmd->add_option("--threat", threat_file, "Threat spec JSON")->required();
  simulate_cmd->add_option("--steps,-T", sim.steps, "Maximum number of updates")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--tol", sim.tolerance, "Agreement tolerance")
      ->check(CLI::PositiveNumber);

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Random-graph bound-tightness sweep");
  experiment->fallthrough();
  ExperimentConfig config;
  std::vector<std::string> offsets{"odd", "even"};
  experiment->add_option("--r-values", config.r_values, "Robustness levels")->delimiter(',');
  experiment->add_option("--p-values", config.p_values, "Edge probabilities")->delimiter(',');
  experiment->add_option("--samples-per-p", config.samples_per_p, "Accepted graphs per p");
  experiment->add_option("--node-offsets", offsets, "odd (n=2r-1), even (n=2r)")
      ->delimiter(',')
      ->check(CLI::IsMember({"odd", "even"}));
  experiment->add_option("--max-attempts", config.max_attempts, "Attempts per (r, n, p)");
  experiment->add_option("--workers", config.workers, "Worker threads (0: all cores)");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Print edge lower bounds");
  bounds->fallthrough();
  std::size_t r_min = 1;
  std::size_t r_max = 10;
  bounds->add_option("--r-min", r_min, "Smallest r");
  bounds->add_option("--r-max", r_max, "Largest r");

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (*seed_opt) opts.seed = seed;
  opts.output = output;
  opts.format = format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;

  if (*construct) {
    ConstructionRecipe recipe;
    try {
      if (*recipe_opt) {
        recipe = recipe_from_json(read_json_file(recipe_file));
      } else {
        if (!*kind_opt) throw InputError("construct needs --kind or --recipe");
        recipe.kind = parse_recipe_kind(kind);
        if (*r_opt) recipe.r = r;
        if (*n_opt) recipe.n = n;
        if (*p_opt) recipe.p = p;
        if (*shape_opt) recipe.tree_shape = parse_tree_shape(tree_shape);
        const bool random_kind = recipe.kind == RecipeKind::kErdosRenyi ||
                                 recipe.tree_shape == TreeShape::kRandom;
        if (random_kind) recipe.seed = opts.seed.value_or(0);
        validate(recipe);
      }
    } catch (const std::exception& e) {
      err << "construct: " << e.what() << '\n';
      return kExitInputError;
    }
    return cmd_construct(recipe, opts, out, err);
  }
  if (*certify) return cmd_certify(graph_file, opts, out, err);
  if (*simulate_cmd) {
    sim.graph_file = sim_graph;
    sim.threat_spec = threat_file;
    return cmd_simulate(sim, opts, out, err);
  }
  if (*experiment) {
    config.odd_order = std::find(offsets.begin(), offsets.end(), "odd") != offsets.end();
    config.even_order = std::find(offsets.begin(), offsets.end(), "even") != offsets.end();
    if (opts.seed) config.master_seed = *opts.seed;
    return cmd_experiment(config, opts, out, err);
  }
  if (*bounds) return cmd_bounds(r_min, r_max, opts, out, err);
  return kExitInputError;
}

}  // namespace robustnet::cli
