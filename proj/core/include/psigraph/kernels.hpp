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

#ifndef PSIGRAPH_KERNELS_HPP
#define PSIGRAPH_KERNELS_HPP

#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "psigraph/spectra.hpp"

namespace psigraph {

/// Block-constant graphon: block i occupies an interval of measure
/// weights[i] (consecutive, in order) and the kernel equals values(i, j) on
/// block i x block j.
class StepKernel {
 public:
  // Validates positivity, sum-to-one within 1e-12 (then renormalizes),
  // symmetry and [0, 1] range; throws InvalidInput otherwise.
  StepKernel(std::vector<double> weights, Eigen::MatrixXd values);

  static StepKernel Constant(double p);

  const std::vector<double>& weights() const { return weights_; }
  const Eigen::MatrixXd& values() const { return values_; }
  int num_blocks() const { return static_cast<int>(weights_.size()); }

  // Block containing x in [0, 1]; x = 1 maps to the last block.
  int block_of(double x) const;
  double operator()(double x, double y) const;

  bool is_zero_one() const;

 private:
  std::vector<double> weights_;
  std::vector<double> cumulative_;  // right endpoints
  Eigen::MatrixXd values_;
};

struct ClosedFormKernel {
  enum class Kind { kConstant, kHalf };
  Kind kind = Kind::kConstant;
  double p = 0.0;  // kConstant only

  static ClosedFormKernel Constant(double p);
  static ClosedFormKernel Half();

  // W(x, y): p, or 1[x + y <= 1] for the half graphon.
  double operator()(double x, double y) const;
};

using Kernel = std::variant<StepKernel, ClosedFormKernel>;

double evaluate(const Kernel& w, double x, double y);

struct KernelNorms {
  double l1 = 0.0;
  double l2sq = 0.0;
};

namespace kernels {

inline constexpr int kDefaultBlocks = 1024;

// Nonzero operator spectrum: eigenvalues of sqrt(w_i) values_ij sqrt(w_j).
Spectrum step_eig(const StepKernel& w, const EigenOptions& options = {});

KernelNorms norms(const StepKernel& w);

/// Block-diagonal p-disjoint union: g's blocks scaled by p, h's by 1 - p,
/// zero between them. Throws InvalidInput unless 0 < p < 1.
StepKernel p_join(const StepKernel& g, const StepKernel& h, double p);

// m equal blocks sampled at block centers ((i - 1/2)/m, (j - 1/2)/m).
StepKernel discretize(const ClosedFormKernel& f, int blocks);

// Closed forms are discretized with `blocks`; step kernels pass through.
StepKernel to_step(const Kernel& w, int blocks = kDefaultBlocks);

// (-1)^n / ((2n + 1) pi), n = 0..N-1.
Spectrum half_graphon_spectrum(int count);

// {"type":"step","weights":[...],"values":[[...]]} | {"type":"constant","p":..} | {"type":"half"}
Kernel kernel_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Kernel& w);
std::string describe(const Kernel& w);

}  // namespace kernels
}  // namespace psigraph

#endif  // PSIGRAPH_KERNELS_HPP
