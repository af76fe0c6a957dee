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
#include <sstream>
#include <vector>

#include "psigraph/error.hpp"
#include "psigraph/series.hpp"
#include "support/oracles.hpp"

namespace psigraph {
namespace {

using Q = Rational;

TruncatedSeries R(std::vector<Q> c) { return TruncatedSeries(std::move(c)); }

std::vector<Q> RandomRationals(std::mt19937_64& rng, int degree, bool zero_constant) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<Q> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = Q(num(rng), den(rng));
  if (zero_constant) c[0] = 0;
  return c;
}

TEST_CASE("multiply truncates the Cauchy product") {
  // (1 - z)(1 + z + z^2/2 + z^3/6) against an untruncated product oracle.
  const std::vector<Q> a{1, -1};
  const std::vector<Q> b{1, 1, Q(1, 2), Q(1, 6)};
  auto full = testing::NaivePolyProduct(a, b);
  full.resize(4);
  const auto product = series::multiply(R(a), R(b), 3);
  CHECK(product.rational_coeffs() == full);
  CHECK(product.rational_coeffs() == std::vector<Q>{1, 0, Q(-1, 2), Q(-1, 3)});

  CHECK(series::multiply(R(b), TruncatedSeries::One(ScalarMode::kRational, 3), 3) == R(b));
  CHECK(series::multiply(TruncatedSeries::Zero(ScalarMode::kRational, 3), R(b), 3) ==
        TruncatedSeries::Zero(ScalarMode::kRational, 3));
}

TEST_CASE("multiply pads shorter operands") {
  const auto product = series::multiply(R({1, 2}), R({3}), 4);
  CHECK(product.degree() == 4);
  CHECK(product.rational_coeffs() == std::vector<Q>{3, 6, 0, 0, 0});
}

TEST_CASE("mixed modes are rejected") {
  const TruncatedSeries a = R({1, 1});
  const TruncatedSeries b(std::vector<double>{1.0, 1.0});
  CHECK_THROWS_AS(series::multiply(a, b, 2), InvalidInput);
  CHECK_THROWS_AS(series::add(a, b), InvalidInput);
  CHECK_THROWS_AS(series::scale_argument(a, 2.0), InvalidInput);
  CHECK_THROWS_AS(series::evaluate(b, Q(1)), InvalidInput);
  CHECK_THROWS_AS((void)a.float_coeffs(), InvalidInput);
}

TEST_CASE("exp of z is the exponential series") {
  const auto e = series::exp(R({0, 1}), 4);
  CHECK(e.rational_coeffs() == std::vector<Q>{1, 1, Q(1, 2), Q(1, 6), Q(1, 24)});
  CHECK(series::exp(TruncatedSeries::Zero(ScalarMode::kRational, 5), 5) ==
        TruncatedSeries::One(ScalarMode::kRational, 5));
}

TEST_CASE("exp(-z^2/2 - z^3/3 - z^4/4) equals (1 - z) e^z") {
  auto oracle = testing::NaivePolyProduct(std::vector<Q>{1, -1}, testing::ExpLinear(Q(1), 4));
  oracle.resize(5);
  const auto e = series::exp(R({0, 0, Q(-1, 2), Q(-1, 3), Q(-1, 4)}), 4);
  CHECK(e.rational_coeffs() == oracle);
  CHECK(e.rational_coeffs() == std::vector<Q>{1, 0, Q(-1, 2), Q(-1, 3), Q(-1, 8)});
}

TEST_CASE("exp rejects a nonzero constant term") {
  CHECK_THROWS_AS(series::exp(R({1, 1}), 3), InvalidInput);
  CHECK_THROWS_AS(series::exp(TruncatedSeries(std::vector<double>{0.5}), 3), InvalidInput);
  CHECK_THROWS_AS(series::log(R({2, 1}), 3), InvalidInput);
}

TEST_CASE("scale_argument substitutes s z") {
  CHECK(series::scale_argument(R({1, 1, 1}), Q(2)).rational_coeffs() == std::vector<Q>{1, 2, 4});
  CHECK(series::scale_argument(R({3, 1, 1}), Q(1)) == R({3, 1, 1}));
  CHECK(series::scale_argument(R({3, 1, 1}), Q(0)) == R({3, 0, 0}));
}

TEST_CASE("evaluate by Horner") {
  CHECK(series::evaluate(R({1, 1, 1}), Q(1)) == 3);
  CHECK(series::evaluate(R({Q(7, 3), 5, -2}), Q(0)) == Q(7, 3));

  // (1 - z) e^z truncated at K = 20 vanishes at z = 1 up to the tail.
  auto c = testing::NaivePolyProduct(std::vector<double>{1.0, -1.0}, testing::ExpLinear(1.0, 20));
  c.resize(21);
  const auto via_exp = series::exp(TruncatedSeries(std::vector<double>{0.0, 1.0}), 20);
  const auto product = series::multiply(TruncatedSeries(std::vector<double>{1.0, -1.0}), via_exp, 20);
  CHECK(std::abs(series::evaluate(product, 1.0)) <= 1e-12);
  CHECK(std::abs(series::evaluate(TruncatedSeries(c), 1.0)) <= 1e-12);
}

TEST_CASE("property: exp turns sums into products (exact)") {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 40; ++trial) {
    const int degree = 1 + static_cast<int>(rng() % 12);
    const auto b = R(RandomRationals(rng, degree, true));
    const auto c = R(RandomRationals(rng, degree, true));
    CHECK(series::exp(series::add(b, c), degree) ==
          series::multiply(series::exp(b, degree), series::exp(c, degree), degree));
  }
}

TEST_CASE("property: log inverts exp (exact)") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int degree = 1 + static_cast<int>(rng() % 12);
    const auto b = R(RandomRationals(rng, degree, true));
    CHECK(series::log(series::exp(b, degree), degree) == b);
  }
}

TEST_CASE("property: argument scaling is multiplicative") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int degree = static_cast<int>(rng() % 10);
    const auto a = R(RandomRationals(rng, degree, false));
    const auto b = R(RandomRationals(rng, degree, false));
    const Q s(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 4));
    CHECK(series::scale_argument(series::multiply(a, b, degree), s) ==
          series::multiply(series::scale_argument(a, s), series::scale_argument(b, s), degree));
  }
}

TEST_CASE("json round trip keeps mode and exact values") {
  const auto a = R({1, 0, Q(-1, 4), Q(-1, 24)});
  const auto j = series::to_json(a);
  CHECK(j["mode"] == "rational");
  CHECK(j["coeffs"][2] == "-1/4");
  CHECK(j["coeffs"][0] == "1");
  CHECK(series::series_from_json(j) == a);

  const TruncatedSeries f(std::vector<double>{1.0, 0.0, -0.25});
  CHECK(series::series_from_json(series::to_json(f)) == f);
  CHECK_THROWS_AS(series::series_from_json(nlohmann::json{{"mode", "complex"}, {"coeffs", {1}}}), InvalidInput);
}

TEST_CASE("csv rows are (k, c_k)") {
  std::ostringstream out;
  series::write_csv(out, R({1, 0, Q(-1, 3)}));
  CHECK(out.str() == "k,coeff\n0,1\n1,0\n2,-1/3\n");
}

TEST_CASE("rational literals") {
  CHECK(series::parse_rational("1/2") == Q(1, 2));
  CHECK(series::parse_rational("-3/9") == Q(-1, 3));
  CHECK(series::parse_rational("0.25") == Q(1, 4));
  CHECK(series::parse_rational("-1.5") == Q(-3, 2));
  CHECK(series::parse_rational("7") == Q(7));
  CHECK_THROWS_AS(series::parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(series::parse_rational("abc"), InvalidInput);
  CHECK_THROWS_AS(series::parse_rational(""), InvalidInput);
}

}  // namespace
}  // namespace psigraph
