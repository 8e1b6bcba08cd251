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

#include "robustnet/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "robustnet/error.hpp"

namespace robustnet {
namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

// Reads exactly `count` non-negative integers from the line, rejecting
// signs, fractions and trailing garbage.
std::vector<std::size_t> parse_integers(const std::string& line, std::size_t count,
                                        std::size_t line_no) {
  std::istringstream in(line);
  std::vector<std::size_t> out;
  std::string token;
  while (in >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                       token + "'");
    }
    out.push_back(std::stoull(token));
  }
  if (out.size() != count) {
    throw InputError("line " + std::to_string(line_no) + ": expected " + std::to_string(count) +
                     " integer(s), got " + std::to_string(out.size()));
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_n = false;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (blank(line)) continue;
    if (!have_n) {
      n = parse_integers(line, 1, line_no)[0];
      have_n = true;
    } else {
      const auto uv = parse_integers(line, 2, line_no);
      edges.push_back({uv[0], uv[1]});
    }
  }
  if (!have_n) throw InputError("edge list is empty: missing vertex count");
  return Graph(n, edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& pair : j.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) throw InputError("edge entries must be [u, v] pairs");
      edges.push_back({pair[0].get<std::size_t>(), pair[1].get<std::size_t>()});
    }
    return Graph(n, edges);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("malformed graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  return parse_edge_list(text);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

}  // namespace robustnet
