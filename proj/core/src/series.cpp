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

#include "psigraph/series.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "psigraph/error.hpp"

namespace psigraph {
namespace {

void RequireSameMode(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.mode() != b.mode()) {
    throw InvalidInput("series mode mismatch: rational and float operands");
  }
}

void RequireDegree(int degree) {
  if (degree < 0) throw InvalidInput("truncation degree must be nonnegative");
}

template <typename T>
std::vector<T> Padded(const std::vector<T>& c, int degree) {
  std::vector<T> out(static_cast<std::size_t>(degree) + 1, T(0));
  const std::size_t n = std::min(out.size(), c.size());
  std::copy_n(c.begin(), n, out.begin());
  return out;
}

template <typename T>
std::vector<T> Multiply(const std::vector<T>& a, const std::vector<T>& b, int degree) {
  std::vector<T> out(static_cast<std::size_t>(degree) + 1, T(0));
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

template <typename T>
std::vector<T> Exp(const std::vector<T>& b, int degree) {
  const std::vector<T> bp = Padded(b, degree);
  std::vector<T> alpha(bp.size(), T(0));
  alpha[0] = 1;
  for (std::size_t n = 1; n < alpha.size(); ++n) {
    T acc = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      if (bp[j] == 0) continue;
      acc += T(static_cast<long>(j)) * bp[j] * alpha[n - j];
    }
    alpha[n] = acc / T(static_cast<long>(n));
  }
  return alpha;
}

template <typename T>
std::vector<T> Log(const std::vector<T>& a, int degree) {
  const std::vector<T> ap = Padded(a, degree);
  std::vector<T> b(ap.size(), T(0));
  for (std::size_t n = 1; n < b.size(); ++n) {
    T acc = T(static_cast<long>(n)) * ap[n];
    for (std::size_t j = 1; j < n; ++j) {
      acc -= T(static_cast<long>(j)) * b[j] * ap[n - j];
    }
    b[n] = acc / T(static_cast<long>(n));
  }
  return b;
}

template <typename T>
std::vector<T> ScaleArgument(std::vector<T> c, const T& s) {
  T power = 1;
  for (auto& x : c) {
    x *= power;
    power *= s;
  }
  return c;
}

template <typename T>
T Horner(const std::vector<T>& c, const T& z) {
  T acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

template <typename F>
TruncatedSeries Dispatch(const TruncatedSeries& a, F&& f) {
  if (a.mode() == ScalarMode::kRational) return TruncatedSeries(f(a.rational_coeffs()));
  return TruncatedSeries(f(a.float_coeffs()));
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (std::get<0>(coeffs_).empty()) throw InvalidInput("series needs at least one coefficient");
}

TruncatedSeries::TruncatedSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (std::get<1>(coeffs_).empty()) throw InvalidInput("series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::Zero(ScalarMode mode, int degree) {
  RequireDegree(degree);
  const auto n = static_cast<std::size_t>(degree) + 1;
  if (mode == ScalarMode::kRational) return TruncatedSeries(std::vector<Rational>(n));
  return TruncatedSeries(std::vector<double>(n, 0.0));
}

TruncatedSeries TruncatedSeries::One(ScalarMode mode, int degree) {
  RequireDegree(degree);
  const auto n = static_cast<std::size_t>(degree) + 1;
  if (mode == ScalarMode::kRational) {
    std::vector<Rational> c(n);
    c[0] = 1;
    return TruncatedSeries(std::move(c));
  }
  std::vector<double> c(n, 0.0);
  c[0] = 1.0;
  return TruncatedSeries(std::move(c));
}

ScalarMode TruncatedSeries::mode() const {
  return coeffs_.index() == 0 ? ScalarMode::kRational : ScalarMode::kFloat;
}

std::size_t TruncatedSeries::size() const {
  return std::visit([](const auto& c) { return c.size(); }, coeffs_);
}

const std::vector<Rational>& TruncatedSeries::rational_coeffs() const {
  if (mode() != ScalarMode::kRational) throw InvalidInput("series is not in rational mode");
  return std::get<0>(coeffs_);
}

const std::vector<double>& TruncatedSeries::float_coeffs() const {
  if (mode() != ScalarMode::kFloat) throw InvalidInput("series is not in float mode");
  return std::get<1>(coeffs_);
}

double TruncatedSeries::coeff_as_double(int k) const {
  if (k < 0 || k > degree()) throw InvalidInput("coefficient index out of range");
  if (mode() == ScalarMode::kRational) {
    return static_cast<double>(std::get<0>(coeffs_)[static_cast<std::size_t>(k)]);
  }
  return std::get<1>(coeffs_)[static_cast<std::size_t>(k)];
}

std::vector<double> TruncatedSeries::to_doubles() const {
  std::vector<double> out(size());
  for (int k = 0; k <= degree(); ++k) out[static_cast<std::size_t>(k)] = coeff_as_double(k);
  return out;
}

TruncatedSeries TruncatedSeries::to_float() const { return TruncatedSeries(to_doubles()); }

TruncatedSeries TruncatedSeries::resized(int degree) const {
  RequireDegree(degree);
  return Dispatch(*this, [degree](const auto& c) { return Padded(c, degree); });
}

namespace series {

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b, int degree) {
  RequireSameMode(a, b);
  RequireDegree(degree);
  if (a.mode() == ScalarMode::kRational) {
    return TruncatedSeries(Multiply(a.rational_coeffs(), b.rational_coeffs(), degree));
  }
  return TruncatedSeries(Multiply(a.float_coeffs(), b.float_coeffs(), degree));
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  RequireSameMode(a, b);
  const int degree = std::max(a.degree(), b.degree());
  auto sum = [&](const auto& x, const auto& y) {
    auto out = Padded(x, degree);
    for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
    return out;
  };
  if (a.mode() == ScalarMode::kRational) {
    return TruncatedSeries(sum(a.rational_coeffs(), b.rational_coeffs()));
  }
  return TruncatedSeries(sum(a.float_coeffs(), b.float_coeffs()));
}

TruncatedSeries negate(const TruncatedSeries& a) {
  return Dispatch(a, [](auto c) {
    for (auto& x : c) x = -x;
    return c;
  });
}

TruncatedSeries exp(const TruncatedSeries& b, int degree) {
  RequireDegree(degree);
  const bool zero = b.mode() == ScalarMode::kRational ? b.rational_coeffs()[0] == 0
                                                      : b.float_coeffs()[0] == 0.0;
  if (!zero) {
    throw InvalidInput("series exp requires a zero constant term");
  }
  return Dispatch(b, [degree](const auto& c) { return Exp(c, degree); });
}

TruncatedSeries log(const TruncatedSeries& a, int degree) {
  RequireDegree(degree);
  const bool unit = a.mode() == ScalarMode::kRational ? a.rational_coeffs()[0] == 1
                                                      : a.float_coeffs()[0] == 1.0;
  if (!unit) throw InvalidInput("series log requires constant term 1");
  return Dispatch(a, [degree](const auto& c) { return Log(c, degree); });
}

TruncatedSeries scale_argument(const TruncatedSeries& a, const Rational& s) {
  return TruncatedSeries(ScaleArgument(a.rational_coeffs(), s));
}

TruncatedSeries scale_argument(const TruncatedSeries& a, double s) {
  return TruncatedSeries(ScaleArgument(a.float_coeffs(), s));
}

Rational evaluate(const TruncatedSeries& a, const Rational& z) {
  return Horner(a.rational_coeffs(), z);
}

double evaluate(const TruncatedSeries& a, double z) { return Horner(a.float_coeffs(), z); }

}  // namespace series
}  // namespace psigraph
