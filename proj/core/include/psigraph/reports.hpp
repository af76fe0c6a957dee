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

#ifndef PSIGRAPH_REPORTS_HPP
#define PSIGRAPH_REPORTS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psigraph/graphs.hpp"
#include "psigraph/series.hpp"

namespace psigraph {

struct QuasirandomOptions {
  int degree = kDefaultDegree;
  // Root search radius; 0 selects 1.5 / p.
  double radius = 0.0;
};

struct QuasirandomRow {
  int n = 0;
  double lambda1 = 0.0;  // modulus-largest eigenvalue of A/n
  double lambda2 = 0.0;
  std::optional<double> root;  // smallest real root of psi_n in radius (p > 0)
  int roots_in_radius = 0;
  double max_coeff = 0.0;  // max_{2<=k<=K} |c_k|
};

struct QuasirandomReport {
  double p = 0.0;
  double tol_root = 0.0;
  double tol_gap = 0.0;
  double radius = 0.0;
  std::vector<QuasirandomRow> rows;
  bool pass = false;
  std::vector<std::string> failures;  // reasons, empty on PASS
};

enum class Sign { kMinus = -1, kZero = 0, kPlus = 1 };

struct SignReport {
  Rational p;
  TruncatedSeries coeffs;
  std::vector<Sign> signs;
  std::vector<int> exact_zeros;  // k != 1 with c_k == 0
  std::optional<std::string> note;
};

struct TuranEntry {
  int k = 0;
  double value = 0.0;  // c_k^2 - c_{k-1} c_{k+1}
  std::optional<Rational> exact;
  bool satisfied = false;  // value >= 0
};

namespace reports {

/// Published sign pattern of the p = 1/2 quasirandom series, k = 0..15.
inline constexpr const char* kPublishedHalfPattern = "+,0,-,+,+,-,-,+,+,+,-,-,+,+,-,-";

/// Spectral (lambda_1, lambda_2) and root view of psi_n along a graph
/// sequence; the verdict is taken on the last graph. Throws InvalidInput on
/// an empty sequence.
QuasirandomReport quasirandom_test(std::span<const Graph> graphs, double p, double tol_root, double tol_gap,
                                   const QuasirandomOptions& options = {});

// Exact signs of the quasirandom series coefficients c_0..c_K.
std::vector<Sign> sign_pattern(const Rational& p, int degree);
std::string format_signs(const std::vector<Sign>& signs);

// Signs plus an exact-zero scan; for p = 1/2 also compares with the
// published pattern and records the first disagreement.
SignReport sign_report(const Rational& p, int degree);

// Turán expressions c_k^2 - c_{k-1} c_{k+1}, 1 <= k <= K-1.
std::vector<TuranEntry> logconcavity_report(const TruncatedSeries& s);

/// Partial products prod_{n < N'} (1 - lambda_n z) for N' = 1..count, in the
/// given order; eigenvalues past the end of the list are zero.
std::vector<double> fredholm_partial_products(std::span<const double> eigenvalues, double z, int count);

}  // namespace reports
}  // namespace psigraph

#endif  // PSIGRAPH_REPORTS_HPP
