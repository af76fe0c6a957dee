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

#ifndef PSIGRAPH_ROOTS_HPP
#define PSIGRAPH_ROOTS_HPP

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "psigraph/series.hpp"

namespace psigraph {

struct RootFinderOptions {
  int max_iterations = 500;
  double residual = 1e-12;
  // Roots with |Im z| below this are treated as real.
  double real_tolerance = 1e-6;
};

struct RootSearch {
  std::optional<double> smallest_real;  // smallest-modulus real root with |z| <= radius
  int count_in_radius = 0;              // all roots (real or not) with |z| <= radius
  std::vector<std::complex<double>> in_radius;
};

namespace roots {

/// All complex roots of c_0 + c_1 z + ... + c_d z^d by Aberth-Ehrlich
/// simultaneous iteration from points on the circle |z| = start_radius.
/// Throws NumericalFailure when the iteration cap is reached.
std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs, double start_radius,
                                                   const RootFinderOptions& options = {});

/// Roots of the truncated polynomial inside |z| <= radius. Starts from the
/// circle of radius 1.5 * radius; leading terms too small to matter on that
/// circle (relative 1e-15) are dropped first.
RootSearch smallest_root(const TruncatedSeries& s, double radius, const RootFinderOptions& options = {});

// K / (3e max|lambda|): beyond this the truncation error dominates.
double trust_radius(int degree, double max_abs_eigenvalue);

}  // namespace roots
}  // namespace psigraph

#endif  // PSIGRAPH_ROOTS_HPP
