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

#include "psigraph/charseries.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "psigraph/error.hpp"
#include "psigraph/partitions.hpp"

namespace psigraph {

std::string to_string(Route route) {
  switch (route) {
    case Route::kEigen: return "eigen";
    case Route::kNewton: return "newton";
    case Route::kHararySachs: return "harary_sachs";
    case Route::kClosedForm: return "closed_form";
    case Route::kPartitionSum: return "partition_sum";
  }
  return "unknown";
}

Route route_from_string(const std::string& name) {
  for (Route r : {Route::kEigen, Route::kNewton, Route::kHararySachs, Route::kClosedForm, Route::kPartitionSum}) {
    if (to_string(r) == name) return r;
  }
  throw InvalidInput("unknown route '" + name + "'");
}

namespace charseries {
namespace {

void RequireDegree(int degree) {
  if (degree < 0) throw InvalidInput("truncation degree must be nonnegative");
}

template <typename T>
TruncatedSeries FromPowerSums(const T& edge_term, std::span<const T> cycle_densities, int degree) {
  if (degree < 2) throw InvalidInput("series_from_power_sums needs degree >= 2");
  std::vector<T> log_coeffs(static_cast<std::size_t>(degree) + 1, T(0));
  log_coeffs[2] = -edge_term / T(2);
  for (int k = 3; k <= degree; ++k) {
    const auto index = static_cast<std::size_t>(k - 3);
    if (index >= cycle_densities.size()) break;
    log_coeffs[static_cast<std::size_t>(k)] = -cycle_densities[index] / T(k);
  }
  return series::exp(TruncatedSeries(std::move(log_coeffs)), degree);
}

template <typename T>
TruncatedSeries Quasirandom(const T& p, int degree) {
  RequireDegree(degree);
  // log of the exponential factor: pz - p(1-p) z^2 / 2
  std::vector<T> exponent(static_cast<std::size_t>(std::max(degree, 2)) + 1, T(0));
  exponent[1] = p;
  exponent[2] = -p * (T(1) - p) / T(2);
  const TruncatedSeries e = series::exp(TruncatedSeries(std::move(exponent)).resized(degree), degree);
  std::vector<T> linear{T(1), -p};
  return series::multiply(TruncatedSeries(std::move(linear)), e, degree);
}

KernelNorms GraphNorms(const Graph& g) {
  const double n = g.num_vertices();
  const double density = 2.0 * g.num_edges() / (n * n);
  return {density, density};
}

}  // namespace

TruncatedSeries eigen_product(std::span<const double> eigenvalues, int degree) {
  RequireDegree(degree);
  std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
  c[0] = 1.0;
  for (double lambda : eigenvalues) {
    for (int k = degree; k >= 1; --k) {
      c[static_cast<std::size_t>(k)] -= lambda * c[static_cast<std::size_t>(k - 1)];
    }
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_from_power_sums(double edge_term, std::span<const double> cycle_densities, int degree) {
  return FromPowerSums<double>(edge_term, cycle_densities, degree);
}

TruncatedSeries series_from_power_sums(const Rational& edge_term, std::span<const Rational> cycle_densities,
                                       int degree) {
  return FromPowerSums<Rational>(edge_term, cycle_densities, degree);
}

PsiResult psi_from_graph(const Graph& g, int degree, Route route) {
  RequireDegree(degree);
  switch (route) {
    case Route::kEigen: {
      Spectrum s = graphs::adjacency_spectrum(g, /*normalized=*/true);
      TruncatedSeries series = eigen_product(s.values, degree);
      return {std::move(series), route, degree, GraphNorms(g), std::move(s)};
    }
    case Route::kNewton: {
      if (degree < 2) {
        return {TruncatedSeries::One(ScalarMode::kFloat, degree), route, degree, GraphNorms(g), std::nullopt};
      }
      const std::vector<double> t = graphs::cycle_hom_densities(g, degree);
      if (t[0] != 0.0) throw NumericalFailure("adjacency trace is not zero");
      std::vector<double> log_coeffs(static_cast<std::size_t>(degree) + 1, 0.0);
      for (int k = 2; k <= degree; ++k) {
        log_coeffs[static_cast<std::size_t>(k)] = -t[static_cast<std::size_t>(k - 1)] / k;
      }
      TruncatedSeries series = series::exp(TruncatedSeries(std::move(log_coeffs)), degree);
      return {std::move(series), route, degree, GraphNorms(g), std::nullopt};
    }
    case Route::kHararySachs: {
      if (degree > kMaxHararySachsDegree || g.num_vertices() > graphs::kMaxBruteForceVertices) {
        throw InvalidInput("harary_sachs route needs n <= " + std::to_string(graphs::kMaxBruteForceVertices) +
                           " and K <= " + std::to_string(kMaxHararySachsDegree));
      }
      std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
      const Integer vertices = g.num_vertices();
      for (int k = 0; k <= degree && k <= g.num_vertices(); ++k) {
        const auto family = partitions::hs_family(k);
        const auto counts = graphs::count_hs_family(g, k);
        Integer numerator = 0;
        for (std::size_t i = 0; i < family.size(); ++i) {
          numerator += family[i].sign * (Integer(1) << family[i].cycles) * Integer(counts[i]);
        }
        c[static_cast<std::size_t>(k)] =
            Rational(numerator, boost::multiprecision::pow(vertices, static_cast<unsigned>(k)));
      }
      return {TruncatedSeries(std::move(c)), route, degree, GraphNorms(g), std::nullopt};
    }
    case Route::kClosedForm:
    case Route::kPartitionSum:
      break;
  }
  throw InvalidInput("route '" + to_string(route) + "' does not apply to graphs");
}

PsiResult psi_from_kernel(const StepKernel& w, int degree, const EigenOptions& options) {
  Spectrum s = kernels::step_eig(w, options);
  const KernelNorms norms = kernels::norms(w);
  std::vector<double> t;
  if (degree >= 3) {
    const std::vector<double> p = spectra::power_sums(s, degree);
    t.assign(p.begin() + 2, p.end());
  }
  TruncatedSeries series = degree >= 2 ? series_from_power_sums(norms.l1, t, degree)
                                       : TruncatedSeries::One(ScalarMode::kFloat, degree);
  return {std::move(series), Route::kEigen, degree, norms, std::move(s)};
}

TruncatedSeries regularized_determinant(std::span<const double> eigenvalues, int degree) {
  RequireDegree(degree);
  TruncatedSeries acc = TruncatedSeries::One(ScalarMode::kFloat, degree);
  std::vector<double> factor(static_cast<std::size_t>(degree) + 1);
  for (double lambda : eigenvalues) {
    // (1 - lambda z) e^{lambda z} = sum_k lambda^k (1 - k) / k! z^k
    double term = 1.0;  // lambda^k / k!
    for (int k = 0; k <= degree; ++k) {
      if (k > 0) term *= lambda / k;
      factor[static_cast<std::size_t>(k)] = term * (1 - k);
    }
    acc = series::multiply(acc, TruncatedSeries(factor), degree);
  }
  return acc;
}

TruncatedSeries hadamard_form(const Spectrum& s, const KernelNorms& norms, int degree) {
  RequireDegree(degree);
  std::vector<double> exponent(static_cast<std::size_t>(degree) + 1, 0.0);
  if (degree >= 2) exponent[2] = (norms.l2sq - norms.l1) / 2.0;
  return series::multiply(series::exp(TruncatedSeries(std::move(exponent)), degree),
                          regularized_determinant(s.values, degree), degree);
}

TruncatedSeries trace_class_form(const Spectrum& s, const KernelNorms& norms, int degree) {
  RequireDegree(degree);
  double trace = 0.0;
  for (double lambda : s.values) trace += lambda;
  std::vector<double> exponent(static_cast<std::size_t>(degree) + 1, 0.0);
  if (degree >= 1) exponent[1] = trace;
  if (degree >= 2) exponent[2] = (norms.l2sq - norms.l1) / 2.0;
  return series::multiply(series::exp(TruncatedSeries(std::move(exponent)), degree),
                          eigen_product(s.values, degree), degree);
}

TruncatedSeries quasirandom_series(const Rational& p, int degree) {
  if (p < 0 || p > 1) throw InvalidInput("quasirandom series needs 0 <= p <= 1");
  return Quasirandom<Rational>(p, degree);
}

TruncatedSeries quasirandom_series(double p, int degree) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("quasirandom series needs 0 <= p <= 1");
  return Quasirandom<double>(p, degree);
}

TruncatedSeries quasirandom_partition_sum(const Rational& p, int degree) {
  RequireDegree(degree);
  if (p < 0 || p > 1) throw InvalidInput("quasirandom partition sum needs 0 <= p <= 1");
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) {
    Rational sum = 0;
    for (int j = 0; j <= k; ++j) {
      for (int i = 0; i <= j; ++i) {
        for (const auto& lambda : partitions::lambda_filter(k, i, j)) {
          Rational term = Rational(1, partitions::eta(lambda));
          for (int e = 0; e < k - i; ++e) term *= p;
          sum += j % 2 == 0 ? term : Rational(-term);
        }
      }
    }
    c[static_cast<std::size_t>(k)] = sum;
  }
  return TruncatedSeries(std::move(c));
}

}  // namespace charseries
}  // namespace psigraph
