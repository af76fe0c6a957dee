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

#include "psigraph/graphs.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "psigraph/error.hpp"
#include "psigraph/rng.hpp"

namespace psigraph {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw InvalidInput("graph needs at least one vertex");
  adjacent_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw InvalidInput("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                         ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw InvalidInput("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    auto& cell = adjacent_[static_cast<std::size_t>(e.u) * static_cast<std::size_t>(n) +
                           static_cast<std::size_t>(e.v)];
    if (cell) {
      throw InvalidInput("duplicate edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
    cell = 1;
    adjacent_[static_cast<std::size_t>(e.v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e.u)] = 1;
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::Empty(int n) { return Graph(n, {}); }

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return adjacent_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] != 0;
}

Eigen::MatrixXd Graph::adjacency() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (const auto& e : edges_) a(e.u, e.v) = a(e.v, e.u) = 1.0;
  return a;
}

namespace graphs {

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) throw InvalidInput("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("erdos_renyi needs 0 <= p <= 1");
  if (n < 1) throw InvalidInput("erdos_renyi needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    auto engine = rng::substream(seed, static_cast<std::uint64_t>(i) + 1);
    for (int j = i + 1; j < n; ++j) {
      if (rng::uniform01(engine) < p) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

Graph from_kernel(const Kernel& w, int n, std::uint64_t seed, Sampling sampling) {
  if (n < 1) throw InvalidInput("from_kernel needs n >= 1");
  std::vector<double> x(static_cast<std::size_t>(n));
  if (sampling == Sampling::kGrid) {
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = (i + 0.5) / n;
  } else {
    auto latent = rng::substream(seed, 0);
    for (auto& xi : x) xi = rng::uniform01(latent);
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    auto engine = rng::substream(seed, static_cast<std::uint64_t>(i) + 1);
    for (int j = i + 1; j < n; ++j) {
      const double prob = evaluate(w, x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)]);
      if (rng::uniform01(engine) < prob) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

Integer labeled_copy_count(const HSTerm& term, const Integer& subset_count) {
  if (subset_count < 0) throw InvalidInput("subset count must be nonnegative");
  return subset_count * (Integer(1) << term.cycles) * term.eta;
}

std::vector<double> cycle_hom_densities(const Graph& g, int max_k) {
  if (max_k < 1) throw InvalidInput("cycle densities need k >= 1");
  const Eigen::MatrixXd b = g.adjacency() / static_cast<double>(g.num_vertices());
  std::vector<double> t;
  t.reserve(static_cast<std::size_t>(max_k));
  Eigen::MatrixXd power = b;
  t.push_back(power.trace());
  for (int k = 2; k <= max_k; ++k) {
    if (k == max_k) {
      // Only the trace of the last power is needed.
      t.push_back((power.array() * b.transpose().array()).sum());
      break;
    }
    power = power * b;
    t.push_back(power.trace());
  }
  return t;
}

double cycle_hom_density(const Graph& g, int k) { return cycle_hom_densities(g, k).back(); }

std::uint64_t count_triangles(const Graph& g) {
  std::uint64_t count = 0;
  for (const auto& e : g.edges()) {
    for (int w = e.v + 1; w < g.num_vertices(); ++w) {
      if (g.has_edge(e.u, w) && g.has_edge(e.v, w)) ++count;
    }
  }
  return count;
}

Spectrum adjacency_spectrum(const Graph& g, bool normalized, const EigenOptions& options) {
  Eigen::MatrixXd a = g.adjacency();
  if (normalized) a /= static_cast<double>(g.num_vertices());
  Spectrum s = spectra::sym_eig(a, options);
  s.origin = std::string(normalized ? "adjacency/n:" : "adjacency:") + std::to_string(g.num_vertices());
  return s;
}

std::vector<Graph> all_labeled_graphs(int n) {
  if (n < 1 || n > 7) throw InvalidInput("labelled graph catalog supports 1 <= n <= 7");
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  std::vector<Graph> out;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask >> b & 1U) edges.push_back(pairs[b]);
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

}  // namespace graphs
}  // namespace psigraph
