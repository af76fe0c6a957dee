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

#ifndef PSIGRAPH_GRAPHS_HPP
#define PSIGRAPH_GRAPHS_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "psigraph/kernels.hpp"
#include "psigraph/partitions.hpp"
#include "psigraph/spectra.hpp"

namespace psigraph {

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Edges are stored with u < v,
/// sorted; loops, duplicates and out-of-range endpoints are rejected.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges);
  static Graph Empty(int n);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;

  // Dense symmetric 0/1 matrix with zero diagonal.
  Eigen::MatrixXd adjacency() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adjacent_;  // n x n, row-major
};

enum class Sampling { kUniform, kGrid };

namespace graphs {

inline constexpr int kMaxBruteForceVertices = 10;

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);

/// G(n, p). Pairs {i, j>i} are decided in order of j from substream i+1 of
/// `seed`, so the result depends only on (n, p, seed).
Graph erdos_renyi(int n, double p, std::uint64_t seed);

/// W-random graph: latent x_i are i.i.d. uniform (substream 0) or the grid
/// (i + 1/2)/n; then {i, j} is an edge with probability W(x_i, x_j).
Graph from_kernel(const Kernel& w, int n, std::uint64_t seed, Sampling sampling);

/// [#H ⊆ G]: number of edge subsets of G forming a vertex-disjoint union of
/// single edges (parts of size 2) and cycles C_b (parts b >= 3) matching the
/// term's partition. Exhaustive; throws InvalidInput when G has more than
/// kMaxBruteForceVertices vertices or the term is larger than that.
std::uint64_t count_hs_subgraphs(const Graph& g, const HSTerm& term);

// count_hs_subgraphs for every term of partitions::hs_family(k), same order.
std::vector<std::uint64_t> count_hs_family(const Graph& g, int k);

// (#H ⊆ G) = [#H ⊆ G] 2^z eta(lambda): labelled copies from edge subsets.
Integer labeled_copy_count(const HSTerm& term, const Integer& subset_count);

// t(C_k, G) = tr(A^k) / n^k by dense matrix powers of A/n.
double cycle_hom_density(const Graph& g, int k);
// t(C_1..C_K, G) sharing one chain of powers.
std::vector<double> cycle_hom_densities(const Graph& g, int max_k);

std::uint64_t count_triangles(const Graph& g);

// Eigenvalues of A (normalized = false) or A/n (normalized = true).
Spectrum adjacency_spectrum(const Graph& g, bool normalized, const EigenOptions& options = {});

// Every labelled graph on n vertices (2^(n choose 2) of them); n <= 7.
std::vector<Graph> all_labeled_graphs(int n);

// "n m" header then m lines "u v", 0-based.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace graphs
}  // namespace psigraph

#endif  // PSIGRAPH_GRAPHS_HPP
