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

#include "psigraph/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "psigraph/error.hpp"

namespace psigraph::roots {
namespace {

using Complex = std::complex<double>;

// p(z), p'(z) and sum |c_k| |z|^k in one Horner pass.
struct Evaluation {
  Complex value;
  Complex derivative;
  double scale;
};

Evaluation Evaluate(std::span<const double> c, Complex z) {
  Evaluation e{0.0, 0.0, 0.0};
  const double r = std::abs(z);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    e.derivative = e.derivative * z + e.value;
    e.value = e.value * z + *it;
    e.scale = e.scale * r + std::abs(*it);
  }
  return e;
}

}  // namespace

std::vector<Complex> polynomial_roots(std::span<const double> coeffs, double start_radius,
                                      const RootFinderOptions& options) {
  std::size_t size = coeffs.size();
  while (size > 0 && coeffs[size - 1] == 0.0) --size;
  if (size <= 1) return {};
  if (coeffs[0] == 0.0) throw InvalidInput("polynomial_roots expects a nonzero constant term");
  const std::span<const double> c = coeffs.first(size);
  const std::size_t degree = size - 1;
  if (!(start_radius > 0.0)) throw InvalidInput("root search needs a positive start radius");

  std::vector<Complex> z(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    // The offset keeps the start off the real axis so conjugate pairs can split.
    const double angle = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.25) / static_cast<double>(degree);
    z[i] = std::polar(start_radius, angle);
  }
  std::vector<bool> done(degree, false);
  int polish = 2;
  for (int iteration = 0; iteration < options.max_iterations; ++iteration) {
    bool all_done = true;
    for (std::size_t i = 0; i < degree; ++i) {
      const Evaluation e = Evaluate(c, z[i]);
      if (std::abs(e.value) <= options.residual * e.scale) {
        done[i] = true;
      } else {
        done[i] = false;
        all_done = false;
      }
      if (e.value == Complex(0.0)) continue;
      const Complex ratio = e.value / e.derivative;
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < degree; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) z[i] -= step;
    }
    if (all_done && polish-- == 0) return z;
  }
  throw NumericalFailure("polynomial root finder did not converge in " + std::to_string(options.max_iterations) +
                         " iterations");
}

RootSearch smallest_root(const TruncatedSeries& s, double radius, const RootFinderOptions& options) {
  if (!(radius > 0.0)) throw InvalidInput("smallest_root needs a positive radius");
  std::vector<double> c = s.to_doubles();
  if (c[0] != 1.0) throw InvalidInput("smallest_root expects a series with constant term 1");

  const double start = 1.5 * radius;
  double largest = 0.0;
  double power = 1.0;
  for (double ck : c) {
    largest = std::max(largest, std::abs(ck) * power);
    power *= start;
  }
  while (c.size() > 1) {
    const double tail = std::abs(c.back()) * std::pow(start, static_cast<double>(c.size() - 1));
    if (tail > 1e-15 * largest) break;
    c.pop_back();
  }

  RootSearch result;
  for (const Complex& root : polynomial_roots(c, start, options)) {
    if (std::abs(root) > radius) continue;
    ++result.count_in_radius;
    result.in_radius.push_back(root);
    if (std::abs(root.imag()) < options.real_tolerance) {
      const double x = root.real();
      if (!result.smallest_real || std::abs(x) < std::abs(*result.smallest_real)) result.smallest_real = x;
    }
  }
  std::sort(result.in_radius.begin(), result.in_radius.end(),
            [](const Complex& a, const Complex& b) { return std::abs(a) < std::abs(b); });
  return result;
}

double trust_radius(int degree, double max_abs_eigenvalue) {
  if (max_abs_eigenvalue <= 0.0) return std::numeric_limits<double>::infinity();
  return degree / (3.0 * std::numbers::e * max_abs_eigenvalue);
}

}  // namespace psigraph::roots
