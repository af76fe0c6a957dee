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

#ifndef PSIGRAPH_TESTS_SUPPORT_ORACLES_HPP
#define PSIGRAPH_TESTS_SUPPORT_ORACLES_HPP

// Test-only reference computations. Nothing here calls into the library's
// series, spectra or Harary-Sachs code paths.

#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace psigraph::testing {

using BigRational = boost::multiprecision::cpp_rational;

// Coefficients of det(xI - A) for an integer matrix, highest power first:
// result[k] is the coefficient of x^{n-k}. Faddeev-LeVerrier in exact integers.
inline std::vector<long long> CharPolyFaddeevLeVerrier(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{k-1} I
    std::vector<std::vector<long long>> next(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        long long s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        next[i][j] = s + (i == j ? c[k - 1] : 0);
      }
    }
    m = next;
    long long trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    }
    c[k] = -trace / static_cast<long long>(k);
  }
  return c;
}

// Number of partitions of k with every part >= 2, by the classic
// coin-change dynamic program over allowed part sizes.
inline std::vector<std::uint64_t> Min2PartitionCounts(int max_k) {
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(max_k) + 1, 0);
  ways[0] = 1;
  for (int part = 2; part <= max_k; ++part) {
    for (int total = part; total <= max_k; ++total) {
      ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - part)];
    }
  }
  return ways;
}

template <typename T>
std::vector<T> NaivePolyProduct(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Taylor coefficients of e^{s z} up to degree K.
template <typename T>
std::vector<T> ExpLinear(const T& s, int degree) {
  std::vector<T> c(static_cast<std::size_t>(degree) + 1);
  T term = 1;
  for (int k = 0; k <= degree; ++k) {
    if (k > 0) term = term * s / T(k);
    c[static_cast<std::size_t>(k)] = term;
  }
  return c;
}

inline std::vector<std::vector<long long>> IntegerAdjacency(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<long long>> a(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : edges) a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  return a;
}

}  // namespace psigraph::testing

#endif  // PSIGRAPH_TESTS_SUPPORT_ORACLES_HPP
