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

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "psigraph/charseries.hpp"
#include "psigraph/error.hpp"

namespace psigraph {
namespace {

using Q = Rational;

void CheckCoeffs(const TruncatedSeries& s, const std::vector<double>& want, double tol) {
  REQUIRE(s.degree() + 1 >= static_cast<int>(want.size()));
  for (std::size_t k = 0; k < want.size(); ++k) {
    INFO("k = " << k);
    CHECK(std::abs(s.coeff_as_double(static_cast<int>(k)) - want[k]) <= tol);
  }
}

double MaxDiff(const TruncatedSeries& a, const TruncatedSeries& b) {
  double d = 0.0;
  for (int k = 0; k <= std::min(a.degree(), b.degree()); ++k) {
    d = std::max(d, std::abs(a.coeff_as_double(k) - b.coeff_as_double(k)));
  }
  return d;
}

StepKernel RandomStepKernel(std::mt19937_64& rng, int blocks, bool zero_one = false) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w(static_cast<std::size_t>(blocks));
  double total = 0.0;
  for (auto& x : w) total += (x = 0.2 + u(rng));
  for (auto& x : w) x /= total;
  Eigen::MatrixXd v(blocks, blocks);
  for (int i = 0; i < blocks; ++i) {
    for (int j = 0; j <= i; ++j) v(i, j) = v(j, i) = zero_one ? (u(rng) < 0.5 ? 0.0 : 1.0) : u(rng);
  }
  return StepKernel(std::move(w), std::move(v));
}

TEST_CASE("K3 by all three graph routes") {
  const Graph k3 = graphs::complete(3);
  const std::vector<double> want{1.0, 0.0, -1.0 / 3.0, -2.0 / 27.0};
  CheckCoeffs(charseries::psi_from_graph(k3, 3, Route::kEigen).series, want, 1e-12);
  CheckCoeffs(charseries::psi_from_graph(k3, 3, Route::kNewton).series, want, 1e-12);
  const auto hs = charseries::psi_from_graph(k3, 3, Route::kHararySachs).series;
  CHECK(hs.rational_coeffs() == std::vector<Q>{1, 0, Q(-1, 3), Q(-2, 27)});
}

TEST_CASE("path P3 and a single vertex") {
  CheckCoeffs(charseries::psi_from_graph(graphs::path(3), 4).series, {1.0, 0.0, -2.0 / 9.0, 0.0, 0.0}, 1e-12);
  CHECK(charseries::psi_from_graph(graphs::path(3), 4, Route::kHararySachs).series.rational_coeffs() ==
        std::vector<Q>{1, 0, Q(-2, 9), 0, 0});
  for (auto route : {Route::kEigen, Route::kNewton, Route::kHararySachs}) {
    CheckCoeffs(charseries::psi_from_graph(Graph::Empty(1), 5, route).series, {1, 0, 0, 0, 0, 0}, 0.0);
  }
}

TEST_CASE("route and scale errors") {
  CHECK_THROWS_AS(charseries::psi_from_graph(graphs::complete(11), 4, Route::kHararySachs), InvalidInput);
  CHECK_THROWS_AS(charseries::psi_from_graph(graphs::complete(5), 9, Route::kHararySachs), InvalidInput);
  CHECK_THROWS_AS(charseries::psi_from_graph(graphs::complete(5), 4, Route::kClosedForm), InvalidInput);
  CHECK(route_from_string("newton") == Route::kNewton);
  CHECK_THROWS_AS(route_from_string("magic"), InvalidInput);
}

TEST_CASE("property: eigen and newton routes agree") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 150);
    const Graph g = graphs::erdos_renyi(n, 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0, rng());
    const auto eigen = charseries::psi_from_graph(g, 16, Route::kEigen).series;
    const auto newton = charseries::psi_from_graph(g, 16, Route::kNewton).series;
    CHECK(MaxDiff(eigen, newton) <= 1e-10);
  }
}

TEST_CASE("property: eigen and Harary-Sachs routes agree up to n = 8") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = graphs::erdos_renyi(n, 0.6, rng());
    const auto eigen = charseries::psi_from_graph(g, 8, Route::kEigen).series;
    const auto hs = charseries::psi_from_graph(g, 8, Route::kHararySachs).series;
    CHECK(MaxDiff(eigen, hs) <= 1e-9);
  }
}

TEST_CASE("property: monic, traceless, c2 and c3 from edges and triangles") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 80);
    const Graph g = graphs::erdos_renyi(n, 0.5, rng());
    const auto s = charseries::psi_from_graph(g, 6).series;
    const double nn = n;
    CHECK(s.coeff_as_double(0) == 1.0);
    CHECK(std::abs(s.coeff_as_double(1)) <= 1e-12);
    CHECK(std::abs(s.coeff_as_double(2) + g.num_edges() / (nn * nn)) <= 1e-10);
    CHECK(std::abs(s.coeff_as_double(3) + 2.0 * static_cast<double>(graphs::count_triangles(g)) / (nn * nn * nn)) <=
          1e-10);
  }
}

TEST_CASE("series_from_power_sums examples (exact)") {
  // Constant p graphon: single eigenvalue p, t_k = p^k.
  const Q p(1, 3);
  std::vector<Q> t;
  Q power = p * p;
  for (int k = 3; k <= 12; ++k) t.push_back(power *= p);
  CHECK(charseries::series_from_power_sums(p, t, 12) == charseries::quasirandom_series(p, 12));

  CHECK(charseries::series_from_power_sums(Q(0), std::vector<Q>(8, Q(0)), 10) ==
        TruncatedSeries::One(ScalarMode::kRational, 10));

  // 2-block bipartite kernel: eigenvalues +-1/2.
  const std::vector<Q> bip{0, Q(1, 8), 0, Q(1, 32)};
  CHECK(charseries::series_from_power_sums(Q(1, 2), bip, 6).rational_coeffs() ==
        std::vector<Q>{1, 0, Q(-1, 4), 0, 0, 0, 0});
  CHECK_THROWS_AS(charseries::series_from_power_sums(0.5, std::vector<double>{}, 1), InvalidInput);
}

TEST_CASE("psi_from_kernel examples") {
  // (1 - z) e^z
  CheckCoeffs(charseries::psi_from_kernel(StepKernel::Constant(1.0), 6).series,
              {1, 0, -0.5, -1.0 / 3, -1.0 / 8, -1.0 / 30, -1.0 / 144}, 1e-14);
  CheckCoeffs(charseries::psi_from_kernel(StepKernel::Constant(0.5), 6).series,
              {1, 0, -1.0 / 4, -1.0 / 24, 1.0 / 64, 1.0 / 240, -1.0 / 2304}, 1e-15);
  Eigen::Matrix2d off;
  off << 0, 1, 1, 0;
  const auto bip = charseries::psi_from_kernel(StepKernel({0.5, 0.5}, off), 10);
  CheckCoeffs(bip.series, {1, 0, -0.25, 0, 0, 0, 0, 0, 0, 0, 0}, 1e-15);
  CHECK(bip.norms.l1 == doctest::Approx(0.5));
  CHECK(bip.norms.l2sq == doctest::Approx(0.5));
}

TEST_CASE("quasirandom coefficients c2, c3, c4 exactly") {
  for (const Q p : {Q(0), Q(1, 10), Q(1, 3), Q(1, 2), Q(5, 7), Q(1)}) {
    const auto series = charseries::quasirandom_series(p, 6);
    const auto& c = series.rational_coeffs();
    CHECK(c[0] == 1);
    CHECK(c[1] == 0);
    CHECK(c[2] == -p / 2);
    CHECK(c[3] == -p * p * p / 3);
    CHECK(c[4] == p * p / 8 - p * p * p * p / 4);
  }
  CHECK(charseries::quasirandom_series(Q(1, 2), 2).rational_coeffs()[2] == Q(-1, 4));
  CHECK_THROWS_AS(charseries::quasirandom_series(Q(3, 2), 4), InvalidInput);
}

TEST_CASE("quasirandom partition sum") {
  const auto s = charseries::quasirandom_partition_sum(Q(1, 2), 5).rational_coeffs();
  CHECK(s[0] == 1);
  CHECK(s[1] == 0);
  CHECK(s[5] == Q(1, 240));
  for (const Q p : {Q(1, 10), Q(1, 4), Q(1, 2), Q(3, 4), Q(9, 10)}) {
    CHECK(charseries::quasirandom_partition_sum(p, 16) == charseries::quasirandom_series(p, 16));
  }
}

TEST_CASE("property: product law for p-joins") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = RandomStepKernel(rng, 1 + static_cast<int>(rng() % 5));
    const auto h = RandomStepKernel(rng, 1 + static_cast<int>(rng() % 5));
    const double p = trial % 2 == 0 ? 0.3 : 0.5;
    const auto joined = charseries::psi_from_kernel(kernels::p_join(g, h, p), 12).series;
    const auto product = series::multiply(
        series::scale_argument(charseries::psi_from_kernel(g, 12).series, p),
        series::scale_argument(charseries::psi_from_kernel(h, 12).series, 1.0 - p), 12);
    CHECK(MaxDiff(joined, product) <= 1e-10);
  }
}

TEST_CASE("property: bipartite kernels have no odd coefficients") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 10; ++trial) {
    const int a = 1 + static_cast<int>(rng() % 3);
    const int b = 1 + static_cast<int>(rng() % 3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> w(static_cast<std::size_t>(a + b));
    double total = 0.0;
    for (auto& x : w) total += (x = 0.1 + u(rng));
    for (auto& x : w) x /= total;
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(a + b, a + b);
    for (int i = 0; i < a; ++i) {
      for (int j = a; j < a + b; ++j) v(i, j) = v(j, i) = u(rng);
    }
    const auto s = charseries::psi_from_kernel(StepKernel(std::move(w), std::move(v)), 15).series;
    for (int k = 1; k <= 15; k += 2) CHECK(std::abs(s.coeff_as_double(k)) <= 1e-12);
  }
}

TEST_CASE("property: trace-class and Hadamard factorizations match the power-sum route") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const bool zero_one = trial % 2 == 0;
    const auto w = RandomStepKernel(rng, 1 + static_cast<int>(rng() % 6), zero_one);
    const auto psi = charseries::psi_from_kernel(w, 12);
    const auto norms = kernels::norms(w);
    CHECK(MaxDiff(psi.series, charseries::trace_class_form(*psi.spectrum, norms, 12)) <= 1e-10);
    CHECK(MaxDiff(psi.series, charseries::hadamard_form(*psi.spectrum, norms, 12)) <= 1e-10);
    if (zero_one) CHECK(norms.l1 == doctest::Approx(norms.l2sq).epsilon(1e-15));
  }
}

TEST_CASE("regularized determinant is exp of the k >= 2 power sums") {
  const std::vector<double> lambdas{0.4, -0.3, 0.1, -0.05};
  const auto det2 = charseries::regularized_determinant(lambdas, 10);
  std::vector<double> log_coeffs(11, 0.0);
  for (int k = 2; k <= 10; ++k) {
    double pk = 0.0;
    for (double x : lambdas) pk += std::pow(x, k);
    log_coeffs[static_cast<std::size_t>(k)] = -pk / k;
  }
  CHECK(MaxDiff(det2, series::exp(TruncatedSeries(log_coeffs), 10)) <= 1e-15);
}

TEST_CASE("graph psi equals the pixel-kernel form of its blow-up") {
  // psi_n(z) = det(I - zA/n) is the trace-class form of the blow-up kernel
  // with zero trace and l1 = l2sq.
  const Graph g = graphs::erdos_renyi(12, 0.5, 9);
  const auto psi = charseries::psi_from_graph(g, 10);
  CHECK(MaxDiff(psi.series, charseries::trace_class_form(*psi.spectrum, psi.norms, 10)) <= 1e-12);
}

}  // namespace
}  // namespace psigraph
