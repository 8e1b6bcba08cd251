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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "robustnet/graph.hpp"

namespace robustnet {

// Edge-list text: first non-comment line holds n, then one "u v" pair per
// line, 0-based. Anything after '#' on a line is ignored.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// {"n": int, "edges": [[u, v], ...]}
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

// Accepts either format; JSON is recognised by a leading '{'.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

}  // namespace robustnet
