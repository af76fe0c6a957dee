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

#include "psigraph/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "psigraph/error.hpp"

namespace psigraph {

StepKernel::StepKernel(std::vector<double> weights, Eigen::MatrixXd values)
    : weights_(std::move(weights)), values_(std::move(values)) {
  const auto b = static_cast<Eigen::Index>(weights_.size());
  if (b == 0) throw InvalidInput("step kernel needs at least one block");
  if (values_.rows() != b || values_.cols() != b) {
    throw InvalidInput("step kernel values must be a " + std::to_string(b) + "x" + std::to_string(b) +
                       " matrix");
  }
  double total = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) throw InvalidInput("step kernel weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw InvalidInput("step kernel weights must sum to 1");
  for (double& w : weights_) w /= total;
  for (Eigen::Index i = 0; i < b; ++i) {
    for (Eigen::Index j = 0; j < b; ++j) {
      const double v = values_(i, j);
      if (!(v >= 0.0 && v <= 1.0)) throw InvalidInput("step kernel values must lie in [0, 1]");
      if (v != values_(j, i)) throw InvalidInput("step kernel values must be symmetric");
    }
  }
  cumulative_.resize(weights_.size());
  std::partial_sum(weights_.begin(), weights_.end(), cumulative_.begin());
  cumulative_.back() = 1.0;
}

StepKernel StepKernel::Constant(double p) {
  return StepKernel({1.0}, Eigen::MatrixXd::Constant(1, 1, p));
}

int StepKernel::block_of(double x) const {
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
  if (it == cumulative_.end()) return num_blocks() - 1;
  return static_cast<int>(it - cumulative_.begin());
}

double StepKernel::operator()(double x, double y) const { return values_(block_of(x), block_of(y)); }

bool StepKernel::is_zero_one() const {
  return (values_.array() == 0.0 || values_.array() == 1.0).all();
}

ClosedFormKernel ClosedFormKernel::Constant(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("constant kernel needs 0 <= p <= 1");
  return {Kind::kConstant, p};
}

ClosedFormKernel ClosedFormKernel::Half() { return {Kind::kHalf, 0.0}; }

double ClosedFormKernel::operator()(double x, double y) const {
  if (kind == Kind::kConstant) return p;
  return x + y <= 1.0 ? 1.0 : 0.0;
}

double evaluate(const Kernel& w, double x, double y) {
  return std::visit([x, y](const auto& k) { return k(x, y); }, w);
}

namespace kernels {

Spectrum step_eig(const StepKernel& w, const EigenOptions& options) {
  const Eigen::VectorXd root =
      Eigen::Map<const Eigen::VectorXd>(w.weights().data(), w.num_blocks()).cwiseSqrt();
  const Eigen::MatrixXd s = root.asDiagonal() * w.values() * root.asDiagonal();
  // The product is symmetric up to rounding; symmetrize exactly.
  Spectrum spectrum = spectra::sym_eig(0.5 * (s + s.transpose()), options);
  spectrum.origin = "step:" + std::to_string(w.num_blocks());
  return spectrum;
}

KernelNorms norms(const StepKernel& w) {
  KernelNorms n;
  for (int i = 0; i < w.num_blocks(); ++i) {
    for (int j = 0; j < w.num_blocks(); ++j) {
      const double mass = w.weights()[static_cast<std::size_t>(i)] * w.weights()[static_cast<std::size_t>(j)];
      const double v = w.values()(i, j);
      n.l1 += mass * std::abs(v);
      n.l2sq += mass * v * v;
    }
  }
  return n;
}

StepKernel p_join(const StepKernel& g, const StepKernel& h, double p) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidInput("p_join needs 0 < p < 1");
  const int bg = g.num_blocks();
  const int bh = h.num_blocks();
  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(bg + bh));
  for (double w : g.weights()) weights.push_back(p * w);
  for (double w : h.weights()) weights.push_back((1.0 - p) * w);
  Eigen::MatrixXd values = Eigen::MatrixXd::Zero(bg + bh, bg + bh);
  values.topLeftCorner(bg, bg) = g.values();
  values.bottomRightCorner(bh, bh) = h.values();
  return StepKernel(std::move(weights), std::move(values));
}

StepKernel discretize(const ClosedFormKernel& f, int blocks) {
  if (blocks < 1) throw InvalidInput("discretize needs at least one block");
  const double m = blocks;
  Eigen::MatrixXd values(blocks, blocks);
  for (int i = 0; i < blocks; ++i) {
    for (int j = 0; j <= i; ++j) {
      values(i, j) = values(j, i) = f((i + 0.5) / m, (j + 0.5) / m);
    }
  }
  return StepKernel(std::vector<double>(static_cast<std::size_t>(blocks), 1.0 / m), std::move(values));
}

StepKernel to_step(const Kernel& w, int blocks) {
  if (const auto* step = std::get_if<StepKernel>(&w)) return *step;
  const auto& closed = std::get<ClosedFormKernel>(w);
  // Constants are exactly one block; resampling would only add zero eigenvalues.
  if (closed.kind == ClosedFormKernel::Kind::kConstant) return StepKernel::Constant(closed.p);
  return discretize(closed, blocks);
}

Spectrum half_graphon_spectrum(int count) {
  if (count < 1) throw InvalidInput("half_graphon_spectrum needs N >= 1");
  Spectrum s;
  s.origin = "half:closed-form";
  s.values.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) {
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    s.values.push_back(sign / ((2.0 * n + 1.0) * std::numbers::pi));
  }
  return s;
}

}  // namespace kernels
}  // namespace psigraph
