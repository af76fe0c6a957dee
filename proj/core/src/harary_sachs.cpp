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

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "psigraph/error.hpp"
#include "psigraph/graphs.hpp"

namespace psigraph::graphs {
namespace {

// Sizes of the components of `chosen` in decreasing order, provided every
// component is a single edge or a cycle; empty otherwise.
std::vector<int> EdgeCycleComponents(int n, const std::vector<Edge>& chosen) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const auto& e : chosen) parent[static_cast<std::size_t>(find(e.u))] = find(e.v);

  std::map<int, std::pair<int, int>> components;  // root -> (vertices, edges)
  std::vector<bool> touched(static_cast<std::size_t>(n), false);
  for (const auto& e : chosen) {
    for (int v : {e.u, e.v}) {
      if (!touched[static_cast<std::size_t>(v)]) {
        touched[static_cast<std::size_t>(v)] = true;
        ++components[find(v)].first;
      }
    }
    ++components[find(e.u)].second;
  }
  std::vector<int> sizes;
  for (const auto& [root, ve] : components) {
    const auto [vertices, edges] = ve;
    const bool single_edge = vertices == 2 && edges == 1;
    const bool is_cycle = vertices >= 3 && edges == vertices;
    if (!single_edge && !is_cycle) return {};
    sizes.push_back(vertices);
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

// Visits every edge subset of exactly `num_edges` edges with maximum degree
// <= 2 touching at most `max_vertices` vertices.
class DegreeTwoSubsets {
 public:
  DegreeTwoSubsets(const Graph& g, int num_edges, int max_vertices,
                   std::function<void(const std::vector<Edge>&)> visit)
      : g_(g),
        num_edges_(num_edges),
        max_vertices_(max_vertices),
        degree_(static_cast<std::size_t>(g.num_vertices()), 0),
        visit_(std::move(visit)) {}

  void Run() { Recurse(0); }

 private:
  void Recurse(std::size_t next) {
    const int have = static_cast<int>(chosen_.size());
    if (have == num_edges_) {
      visit_(chosen_);
      return;
    }
    const auto& edges = g_.edges();
    if (edges.size() - next < static_cast<std::size_t>(num_edges_ - have)) return;
    for (std::size_t i = next; i < edges.size(); ++i) {
      if (edges.size() - i < static_cast<std::size_t>(num_edges_ - have)) return;
      const Edge e = edges[i];
      auto& du = degree_[static_cast<std::size_t>(e.u)];
      auto& dv = degree_[static_cast<std::size_t>(e.v)];
      if (du == 2 || dv == 2) continue;
      const int added = (du == 0) + (dv == 0);
      if (touched_ + added > max_vertices_) continue;
      ++du;
      ++dv;
      touched_ += added;
      chosen_.push_back(e);
      Recurse(i + 1);
      chosen_.pop_back();
      touched_ -= added;
      --du;
      --dv;
    }
  }

  const Graph& g_;
  int num_edges_;
  int max_vertices_;
  int touched_ = 0;
  std::vector<int> degree_;
  std::vector<Edge> chosen_;
  std::function<void(const std::vector<Edge>&)> visit_;
};

void RequireBruteForceScale(const Graph& g, int k) {
  if (g.num_vertices() > kMaxBruteForceVertices || k > kMaxBruteForceVertices) {
    throw InvalidInput("Harary-Sachs subgraph counting is limited to " +
                       std::to_string(kMaxBruteForceVertices) + " vertices");
  }
}

}  // namespace

std::uint64_t count_hs_subgraphs(const Graph& g, const HSTerm& term) {
  RequireBruteForceScale(g, term.num_vertices());
  if (term.partition.empty()) return 1;
  const std::vector<int> target = term.partition.expanded();
  std::uint64_t count = 0;
  DegreeTwoSubsets(g, term.num_edges(), term.num_vertices(), [&](const std::vector<Edge>& chosen) {
    if (EdgeCycleComponents(g.num_vertices(), chosen) == target) ++count;
  }).Run();
  return count;
}

std::vector<std::uint64_t> count_hs_family(const Graph& g, int k) {
  RequireBruteForceScale(g, k);
  const auto family = partitions::hs_family(k);
  std::vector<std::uint64_t> counts(family.size(), 0);
  std::map<std::vector<int>, std::size_t> index;
  std::set<int> edge_counts;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].partition.empty()) {
      counts[i] = 1;
      continue;
    }
    index[family[i].partition.expanded()] = i;
    edge_counts.insert(family[i].num_edges());
  }
  for (int num_edges : edge_counts) {
    DegreeTwoSubsets(g, num_edges, k, [&](const std::vector<Edge>& chosen) {
      const auto sizes = EdgeCycleComponents(g.num_vertices(), chosen);
      if (sizes.empty()) return;
      if (const auto it = index.find(sizes); it != index.end()) ++counts[it->second];
    }).Run();
  }
  return counts;
}

}  // namespace psigraph::graphs
