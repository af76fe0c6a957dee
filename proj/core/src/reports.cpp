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

#include "psigraph/reports.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "psigraph/charseries.hpp"
#include "psigraph/error.hpp"
#include "psigraph/roots.hpp"

namespace psigraph::reports {
namespace {

std::vector<std::string> Split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::string SignToken(Sign s) {
  switch (s) {
    case Sign::kPlus: return "+";
    case Sign::kZero: return "0";
    case Sign::kMinus: return "-";
  }
  return "?";
}

}  // namespace

QuasirandomReport quasirandom_test(std::span<const Graph> graphs, double p, double tol_root, double tol_gap,
                                   const QuasirandomOptions& options) {
  if (graphs.empty()) throw InvalidInput("quasirandom_test needs at least one graph");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("quasirandom_test needs 0 <= p <= 1");
  QuasirandomReport report;
  report.p = p;
  report.tol_root = tol_root;
  report.tol_gap = tol_gap;
  report.radius = options.radius > 0.0 ? options.radius : (p > 0.0 ? 1.5 / p : 0.0);

  for (const Graph& g : graphs) {
    const PsiResult psi = charseries::psi_from_graph(g, options.degree, Route::kEigen);
    QuasirandomRow row;
    row.n = g.num_vertices();
    const auto& values = psi.spectrum->values;
    row.lambda1 = values.empty() ? 0.0 : values[0];
    row.lambda2 = values.size() < 2 ? 0.0 : values[1];
    for (int k = 2; k <= psi.series.degree(); ++k) {
      row.max_coeff = std::max(row.max_coeff, std::abs(psi.series.coeff_as_double(k)));
    }
    if (p > 0.0) {
      const RootSearch search = roots::smallest_root(psi.series, report.radius);
      row.root = search.smallest_real;
      row.roots_in_radius = search.count_in_radius;
    }
    report.rows.push_back(row);
  }

  const QuasirandomRow& last = report.rows.back();
  if (std::abs(last.lambda1 - p) > tol_gap) {
    report.failures.push_back("lambda1/n = " + series::format_double(last.lambda1) + " differs from p by more than " +
                              series::format_double(tol_gap));
  }
  if (std::abs(last.lambda2) > tol_gap) {
    report.failures.push_back("|lambda2|/n = " + series::format_double(std::abs(last.lambda2)) + " exceeds " +
                              series::format_double(tol_gap));
  }
  if (p > 0.0) {
    if (!last.root) {
      report.failures.push_back("no real root of psi_n within radius " + series::format_double(report.radius));
    } else if (std::abs(*last.root - 1.0 / p) > tol_root) {
      report.failures.push_back("smallest root " + series::format_double(*last.root) + " differs from 1/p by more than " +
                                series::format_double(tol_root));
    }
  } else if (last.max_coeff > tol_root) {
    report.failures.push_back("max |c_k| = " + series::format_double(last.max_coeff) + " exceeds " +
                              series::format_double(tol_root));
  }
  report.pass = report.failures.empty();
  return report;
}

std::vector<Sign> sign_pattern(const Rational& p, int degree) {
  const TruncatedSeries s = charseries::quasirandom_series(p, degree);
  std::vector<Sign> signs;
  for (const auto& c : s.rational_coeffs()) {
    signs.push_back(c > 0 ? Sign::kPlus : (c < 0 ? Sign::kMinus : Sign::kZero));
  }
  return signs;
}

std::string format_signs(const std::vector<Sign>& signs) {
  std::string out;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i > 0) out += ',';
    out += SignToken(signs[i]);
  }
  return out;
}

SignReport sign_report(const Rational& p, int degree) {
  SignReport report{p, charseries::quasirandom_series(p, degree), sign_pattern(p, degree), {}, std::nullopt};
  const auto& c = report.coeffs.rational_coeffs();
  for (int k = 0; k <= degree; ++k) {
    if (k != 1 && c[static_cast<std::size_t>(k)] == 0) report.exact_zeros.push_back(k);
  }
  if (p == Rational(1, 2)) {
    const auto published = Split(kPublishedHalfPattern);
    const std::size_t common = std::min(published.size(), report.signs.size());
    for (std::size_t k = 0; k < common; ++k) {
      if (published[k] != SignToken(report.signs[k])) {
        report.note = "exact signs differ from the published p=1/2 pattern (" + std::string(kPublishedHalfPattern) +
                      ") first at k=" + std::to_string(k) + ": exact " + SignToken(report.signs[k]) +
                      ", published " + published[k] + "; c_3 = -p^3/3 < 0";
        break;
      }
    }
  }
  return report;
}

std::vector<TuranEntry> logconcavity_report(const TruncatedSeries& s) {
  if (s.degree() < 2) throw InvalidInput("logconcavity_report needs degree >= 2");
  std::vector<TuranEntry> out;
  for (int k = 1; k <= s.degree() - 1; ++k) {
    TuranEntry e;
    e.k = k;
    if (s.mode() == ScalarMode::kRational) {
      const auto& c = s.rational_coeffs();
      const auto i = static_cast<std::size_t>(k);
      const Rational v = c[i] * c[i] - c[i - 1] * c[i + 1];
      e.exact = v;
      e.value = static_cast<double>(v);
      e.satisfied = v >= 0;
    } else {
      const auto& c = s.float_coeffs();
      const auto i = static_cast<std::size_t>(k);
      e.value = c[i] * c[i] - c[i - 1] * c[i + 1];
      e.satisfied = e.value >= 0.0;
    }
    out.push_back(e);
  }
  return out;
}

std::vector<double> fredholm_partial_products(std::span<const double> eigenvalues, double z, int count) {
  if (count < 1) throw InvalidInput("fredholm_partial_products needs N >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  double product = 1.0;
  for (int i = 0; i < count; ++i) {
    const double lambda = static_cast<std::size_t>(i) < eigenvalues.size() ? eigenvalues[static_cast<std::size_t>(i)] : 0.0;
    product *= 1.0 - lambda * z;
    out.push_back(product);
  }
  return out;
}

}  // namespace psigraph::reports
