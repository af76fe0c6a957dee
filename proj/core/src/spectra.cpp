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

#include "psigraph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "psigraph/error.hpp"

namespace psigraph::spectra {
namespace {

double OffDiagonalMass(const Eigen::MatrixXd& m) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < j; ++i) sum += m(i, j) * m(i, j);
  }
  return std::sqrt(2.0 * sum);
}

void Rotate(Eigen::MatrixXd& a, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    if (r == p || r == q) continue;
    const double g = a(r, p);
    const double h = a(r, q);
    a(r, p) = c * g - s * h;
    a(p, r) = a(r, p);
    a(r, q) = s * g + c * h;
    a(q, r) = a(r, q);
  }
}

}  // namespace

std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd m, double tol, int max_sweeps) {
  const Eigen::Index n = m.rows();
  const double threshold = tol * m.norm();
  int sweep = 0;
  while (OffDiagonalMass(m) > threshold) {
    if (sweep++ >= max_sweeps) {
      throw NumericalFailure("Jacobi eigenvalue iteration did not converge in " +
                             std::to_string(max_sweeps) + " sweeps");
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) Rotate(m, p, q);
    }
  }
  std::vector<double> values(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = m(i, i);
  return values;
}

void sort_by_modulus(std::vector<double>& values) {
  std::sort(values.begin(), values.end(), [](double a, double b) {
    const double ma = std::abs(a);
    const double mb = std::abs(b);
    if (ma != mb) return ma > mb;
    return a > b;
  });
  // Pairs +x, -x that differ in the last bits of modulus keep the positive one first.
  double scale = values.empty() ? 0.0 : std::abs(values.front());
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[i - 1] && std::abs(std::abs(values[i]) - std::abs(values[i - 1])) <= 1e-13 * scale) {
      std::swap(values[i], values[i - 1]);
    }
  }
}

bool is_modulus_ordered(const std::vector<double>& values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double prev = std::abs(values[i - 1]);
    const double cur = std::abs(values[i]);
    if (prev < cur || (prev == cur && values[i - 1] < values[i])) return false;
  }
  return true;
}

Spectrum sym_eig(const Eigen::MatrixXd& m, const EigenOptions& options) {
  if (m.rows() != m.cols() || m.rows() < 1) throw InvalidInput("sym_eig needs a nonempty square matrix");
  if (m.rows() > kMaxDimension) {
    throw InvalidInput("matrix dimension " + std::to_string(m.rows()) + " exceeds cap " +
                       std::to_string(kMaxDimension));
  }
  if (((m - m.transpose()).cwiseAbs().array() > 1e-12).any()) {
    throw InvalidInput("sym_eig input is not symmetric");
  }
  EigenMethod method = options.method;
  if (method == EigenMethod::kAuto) {
    method = m.rows() <= kJacobiMaxDimension ? EigenMethod::kJacobi : EigenMethod::kTridiagonalQR;
  }

  Spectrum s;
  s.origin = "matrix:" + std::to_string(m.rows());
  if (method == EigenMethod::kJacobi) {
    s.values = jacobi_eigenvalues(m, options.tol, options.max_sweeps);
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalFailure("tridiagonal QR did not converge");
    const auto& ev = solver.eigenvalues();
    s.values.assign(ev.data(), ev.data() + ev.size());
  }
  sort_by_modulus(s.values);
  return s;
}

std::vector<double> power_sums(const Spectrum& s, int degree) {
  if (degree < 1) throw InvalidInput("power_sums needs degree >= 1");
  std::vector<double> p(static_cast<std::size_t>(degree), 0.0);
  for (double lambda : s.values) {
    double power = 1.0;
    for (int k = 1; k <= degree; ++k) {
      power *= lambda;
      p[static_cast<std::size_t>(k - 1)] += power;
    }
  }
  return p;
}

double energy(const Spectrum& s) {
  double e = 0.0;
  for (double lambda : s.values) e += std::abs(lambda);
  return e;
}

}  // namespace psigraph::spectra
