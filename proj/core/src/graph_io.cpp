// Copyright 2026 The psigraph Authors
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

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "psigraph/error.hpp"
#include "psigraph/graphs.hpp"

namespace psigraph::graphs {
namespace {

bool NextDataLine(std::istream& in, std::string& line, int& line_number) {
  while (std::getline(in, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

void ParseTwo(const std::string& line, int line_number, long long& a, long long& b) {
  std::istringstream fields(line);
  std::string extra;
  if (!(fields >> a >> b) || (fields >> extra)) {
    throw InvalidInput("line " + std::to_string(line_number) + ": expected two integers, got '" + line + "'");
  }
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int line_number = 0;
  if (!NextDataLine(in, line, line_number)) throw InvalidInput("graph file is empty");
  long long n = 0;
  long long m = 0;
  ParseTwo(line, line_number, n, m);
  if (n < 1 || n > 1'000'000) throw InvalidInput("vertex count must be in [1, 1e6]");
  if (m < 0 || m > n * (n - 1) / 2) throw InvalidInput("edge count out of range for a simple graph");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!NextDataLine(in, line, line_number)) {
      throw InvalidInput("graph file ends after " + std::to_string(i) + " of " + std::to_string(m) + " edges");
    }
    long long u = 0;
    long long v = 0;
    ParseTwo(line, line_number, u, v);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidInput("line " + std::to_string(line_number) + ": vertex index out of range");
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (NextDataLine(in, line, line_number)) {
    throw InvalidInput("line " + std::to_string(line_number) + ": trailing data after " + std::to_string(m) +
                       " edges");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace psigraph::graphs
