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

#ifndef PSIGRAPH_SERIES_HPP
#define PSIGRAPH_SERIES_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace psigraph {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ScalarMode { kRational, kFloat };

inline constexpr int kDefaultDegree = 16;

/// Real power series c_0 + c_1 z + ... + c_K z^K, truncated at degree K.
///
/// Coefficients are either exact rationals or doubles; the mode is fixed at
/// construction and arithmetic between different modes throws InvalidInput.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<Rational> coeffs);
  explicit TruncatedSeries(std::vector<double> coeffs);

  static TruncatedSeries Zero(ScalarMode mode, int degree);
  static TruncatedSeries One(ScalarMode mode, int degree);

  ScalarMode mode() const;
  int degree() const { return static_cast<int>(size()) - 1; }
  std::size_t size() const;

  // Throw InvalidInput when the series is in the other mode.
  const std::vector<Rational>& rational_coeffs() const;
  const std::vector<double>& float_coeffs() const;

  double coeff_as_double(int k) const;
  std::vector<double> to_doubles() const;

  // Rational series are converted coefficientwise; float series are copied.
  TruncatedSeries to_float() const;

  // Zero-pads or cuts to the requested degree.
  TruncatedSeries resized(int degree) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::variant<std::vector<Rational>, std::vector<double>> coeffs_;
};

namespace series {

// Cauchy product truncated at `degree`; shorter operands are zero-padded.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b, int degree);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);

/// Formal exponential of a series with zero constant term, via
/// alpha_0 = 1, n alpha_n = sum_{j=1..n} j b_j alpha_{n-j}.
TruncatedSeries exp(const TruncatedSeries& b, int degree);

/// Formal logarithm of a series with constant term 1 (inverse of exp),
/// via n b_n = n a_n - sum_{j=1..n-1} j b_j a_{n-j}.
TruncatedSeries log(const TruncatedSeries& a, int degree);

// a(z) -> a(s z).
TruncatedSeries scale_argument(const TruncatedSeries& a, const Rational& s);
TruncatedSeries scale_argument(const TruncatedSeries& a, double s);

// Horner evaluation of the truncated polynomial.
Rational evaluate(const TruncatedSeries& a, const Rational& z);
double evaluate(const TruncatedSeries& a, double z);

// Serialization: {"mode": "rational"|"float", "coeffs": [...]}, rationals as
// "num/den" strings (integers as "num").
nlohmann::json to_json(const TruncatedSeries& a);
TruncatedSeries series_from_json(const nlohmann::json& j);

// Rows "k,c_k" preceded by a "k,coeff" header.
void write_csv(std::ostream& out, const TruncatedSeries& a);

std::string format_rational(const Rational& q);
// Accepts "a/b", "a", or a decimal literal such as "0.25" (converted exactly).
Rational parse_rational(const std::string& text);

// Shortest round-trip decimal representation.
std::string format_double(double x);

}  // namespace series
}  // namespace psigraph

#endif  // PSIGRAPH_SERIES_HPP
