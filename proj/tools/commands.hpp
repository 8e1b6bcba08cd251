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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "robustnet/construct.hpp"
#include "robustnet/experiment.hpp"

namespace robustnet::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailed = 1;
inline constexpr int kExitInputError = 2;

enum class OutputFormat { kCsv, kJson };

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::filesystem::path output;
  OutputFormat format = OutputFormat::kCsv;
  bool quiet = false;
};

struct SimulateArgs {
  std::filesystem::path graph_file;
  std::filesystem::path threat_spec;
  std::size_t steps = 500;
  double tolerance = 1e-6;
};

// Each command writes its report to `out` and diagnostics to `err`, and
// returns the process exit code.
int cmd_construct(const ConstructionRecipe& recipe, const GlobalOptions& opts, std::ostream& out,
                  std::ostream& err);
int cmd_certify(const std::filesystem::path& graph_file, const GlobalOptions& opts,
                std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateArgs& args, const GlobalOptions& opts, std::ostream& out,
                 std::ostream& err);
int cmd_experiment(const ExperimentConfig& config, const GlobalOptions& opts, std::ostream& out,
                   std::ostream& err);
int cmd_bounds(std::size_t r_min, std::size_t r_max, const GlobalOptions& opts, std::ostream& out,
               std::ostream& err);

// Full command line entry point (argv[0] is the program name).
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace robustnet::cli
