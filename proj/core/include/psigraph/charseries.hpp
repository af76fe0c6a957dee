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

#ifndef PSIGRAPH_CHARSERIES_HPP
#define PSIGRAPH_CHARSERIES_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psigraph/graphs.hpp"
#include "psigraph/kernels.hpp"
#include "psigraph/series.hpp"
#include "psigraph/spectra.hpp"

namespace psigraph {

enum class Route { kEigen, kNewton, kHararySachs, kClosedForm, kPartitionSum };

std::string to_string(Route route);
// Throws InvalidInput for unknown names.
Route route_from_string(const std::string& name);

/// The characteristic power series of a graph or graphon together with the
/// data it was computed from.
struct PsiResult {
  TruncatedSeries series;
  Route route = Route::kEigen;
  int degree = kDefaultDegree;
  // ||W||_1 and ||W||_2^2; for a graph these are both 2|E|/n^2.
  KernelNorms norms;
  // Normalized spectrum (A/n, or the kernel operator) when the route used one.
  std::optional<Spectrum> spectrum;
};

namespace charseries {

inline constexpr int kMaxHararySachsDegree = 8;

/// psi_n(z) = det(I - z A/n) truncated at `degree`.
///  - kEigen: product of (1 - lambda_i z) over the eigenvalues of A/n.
///  - kNewton: exp(-sum_{k>=2} tr((A/n)^k) z^k / k) from dense matrix powers.
///  - kHararySachs: exact signed edge/cycle-union counts; n <= 10, degree <= 8.
PsiResult psi_from_graph(const Graph& g, int degree, Route route = Route::kEigen);

/// exp(-edge_term z^2/2 - sum_{k>=3} t_k z^k / k). `cycle_densities` holds
/// t_3, t_4, ...; entries beyond `degree` are ignored, missing ones are 0.
TruncatedSeries series_from_power_sums(double edge_term, std::span<const double> cycle_densities,
                                       int degree);
TruncatedSeries series_from_power_sums(const Rational& edge_term,
                                       std::span<const Rational> cycle_densities, int degree);

/// psi_W through the spectrum of a step kernel: edge term ||W||_1 and
/// t_k = sum_i lambda_i^k.
PsiResult psi_from_kernel(const StepKernel& w, int degree, const EigenOptions& options = {});

// prod_i (1 - lambda_i z), truncated.
TruncatedSeries eigen_product(std::span<const double> eigenvalues, int degree);

/// Hilbert-Carleman determinant det2(I - zW) = prod_i (1 - lambda_i z) e^{lambda_i z},
/// multiplied factor by factor.
TruncatedSeries regularized_determinant(std::span<const double> eigenvalues, int degree);

/// Hadamard form exp(c z^2) prod_r (1 - z/r) e^{z/r} with r = 1/lambda and
/// c = (l2sq - l1)/2; the genus-one exponent has no z^0 or z^1 term.
TruncatedSeries hadamard_form(const Spectrum& s, const KernelNorms& norms, int degree);

/// Trace-class factorization exp((l2sq - l1) z^2/2 + z tr) prod_i (1 - lambda_i z).
TruncatedSeries trace_class_form(const Spectrum& s, const KernelNorms& norms, int degree);

/// (1 - pz) exp(pz - p(1-p) z^2 / 2), exact for rational p.
TruncatedSeries quasirandom_series(const Rational& p, int degree);
TruncatedSeries quasirandom_series(double p, int degree);

/// Coefficient k = sum over partitions of k into parts >= 2 with j parts,
/// i of them equal to 2, of (-1)^j p^{k-i} / eta.
TruncatedSeries quasirandom_partition_sum(const Rational& p, int degree);

}  // namespace charseries
}  // namespace psigraph

#endif  // PSIGRAPH_CHARSERIES_HPP
