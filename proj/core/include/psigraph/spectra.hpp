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

#ifndef PSIGRAPH_SPECTRA_HPP
#define PSIGRAPH_SPECTRA_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace psigraph {

/// Real eigenvalues ordered by decreasing modulus; equal moduli are ordered
/// by decreasing signed value (positive before negative).
struct Spectrum {
  std::vector<double> values;
  std::string origin;
};

enum class EigenMethod {
  kAuto,             // Jacobi up to kJacobiMaxDimension, tridiagonal QR above
  kJacobi,           // cyclic Jacobi rotations
  kTridiagonalQR,    // Householder tridiagonalization + implicit QR (Eigen)
};

struct EigenOptions {
  double tol = 1e-12;
  int max_sweeps = 64;
  EigenMethod method = EigenMethod::kAuto;
};

namespace spectra {

inline constexpr int kMaxDimension = 2048;
inline constexpr int kJacobiMaxDimension = 128;

/// Eigenvalues of a dense symmetric matrix. Throws InvalidInput when M is
/// not symmetric within 1e-12 or outside [1, kMaxDimension], and
/// NumericalFailure when the sweep cap is hit.
Spectrum sym_eig(const Eigen::MatrixXd& m, const EigenOptions& options = {});

// Cyclic Jacobi sweeps until the off-diagonal Frobenius mass drops below
// tol * ||M||_F. Unsorted result.
std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd m, double tol, int max_sweeps);

void sort_by_modulus(std::vector<double>& values);
bool is_modulus_ordered(const std::vector<double>& values);

// p_k = sum_i values[i]^k for k = 1..K.
std::vector<double> power_sums(const Spectrum& s, int degree);

// Sum of |values|; meaningful for an unnormalized adjacency spectrum.
double energy(const Spectrum& s);

}  // namespace spectra
}  // namespace psigraph

#endif  // PSIGRAPH_SPECTRA_HPP
