// Copyright 2026 The qslkit Authors
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

#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "qslkit/errors.hpp"

namespace qslkit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Shared numerical tolerances. Every module uses these cutoffs so that rank
// counting, level grouping and PSD clamping stay consistent across the toolkit.
namespace tol {
inline constexpr double hermiticity = 1e-10;     // max-entry deviation between A and A^dagger
inline constexpr double psd_clamp = 1e-10;       // eigenvalues in [-psd_clamp, 0) are treated as 0
inline constexpr double rank_cutoff = 1e-10;     // density-matrix eigenvalue counts as nonzero
inline constexpr double level_grouping = 1e-8;   // Hamiltonian eigenvalues closer than this form one level
inline constexpr double population = 1e-10;      // tr(P_k rho) above this means the level is populated
inline constexpr double saturation = 1e-8;       // default residual tolerance for saturation checks
}  // namespace tol

// Eigendecomposition of a Hermitian matrix: ascending eigenvalues with a
// matching orthonormal column set.
struct HermitianEig {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

/// True when max-entry |A - A^dagger| <= tolerance.
bool is_hermitian(const ComplexMatrix& a, double tolerance = tol::hermiticity);

/// Throws NonHermitianError unless is_hermitian(a, tolerance).
void require_hermitian(const ComplexMatrix& a, double tolerance = tol::hermiticity);

/// Diagonalizes a Hermitian matrix. Eigenvalues come back ascending.
HermitianEig hermitian_eig(const ComplexMatrix& a);

/// Hermitian PSD square root. Eigenvalues in [-1e-10, 0) are clamped to zero;
/// anything below that raises NotPsdError.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

/// |A| = sqrt(A^dagger A).
ComplexMatrix matrix_abs(const ComplexMatrix& a);

/// tr|A| = sum of singular values of A.
double trace_norm(const ComplexMatrix& a);

/// Tests whether A = e^{i theta} |A| for some real theta, i.e. whether
/// |tr A| = tr|A|. Returns the phase when the residual
/// ||A - e^{i theta}|A|||_F <= tolerance * max(1, ||A||_F), absent otherwise.
std::optional<double> unimodular_proportionality_check(const ComplexMatrix& a,
                                                       double tolerance);

}  // namespace qslkit
