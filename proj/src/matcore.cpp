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

#include "qslkit/matcore.hpp"

#include <cmath>

namespace qslkit {

bool is_hermitian(const ComplexMatrix& a, double tolerance) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

void require_hermitian(const ComplexMatrix& a, double tolerance) {
  if (a.rows() != a.cols()) {
    throw NonHermitianError("matrix is not square");
  }
  const double dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tolerance) {
    throw NonHermitianError("matrix deviates from Hermitian symmetry by " +
                            std::to_string(dev));
  }
}

HermitianEig hermitian_eig(const ComplexMatrix& a) {
  require_hermitian(a);
  // Re-symmetrize so the solver sees an exactly Hermitian input.
  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("Hermitian eigendecomposition failed to converge");
  }
  return HermitianEig{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
  HermitianEig eig = hermitian_eig(a);
  // Eigenvalues within rounding noise of zero are clamped before the root:
  // sqrt amplifies an O(eps) noise eigenvalue to O(sqrt(eps)), which would
  // dominate the error of the result for rank-deficient inputs.
  const double scale =
      eig.eigenvalues.size() > 0 ? eig.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  const double noise_floor = scale *
                             static_cast<double>(eig.eigenvalues.size()) *
                             std::numeric_limits<double>::epsilon();
  RealVector roots(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    double lambda = eig.eigenvalues[i];
    if (lambda < -tol::psd_clamp) {
      throw NotPsdError("eigenvalue " + std::to_string(lambda) +
                        " below PSD tolerance");
    }
    roots[i] = lambda <= noise_floor ? 0.0 : std::sqrt(lambda);
  }
  return eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix matrix_abs(const ComplexMatrix& a) {
  return psd_sqrt(a.adjoint() * a);
}

double trace_norm(const ComplexMatrix& a) {
  // Sum of singular values. Computed by SVD rather than as sqrt of the
  // spectrum of A^dagger A: squaring floors the small singular values at the
  // square root of the eigensolver noise (~1e-8), which is far too coarse
  // for rank-deficient products.
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues().sum();
}

std::optional<double> unimodular_proportionality_check(const ComplexMatrix& a,
                                                       double tolerance) {
  if (a.rows() != a.cols()) {
    throw DimMismatchError("unimodular proportionality check needs a square matrix");
  }
  const double scale = std::max(1.0, a.norm());
  const Complex trace = a.trace();

  double theta;
  if (std::abs(trace) > 1e-14 * scale) {
    theta = std::arg(trace);
  } else if (a.norm() <= 1e-14 * scale) {
    // A ~ 0: A = e^{i theta}|A| holds for every theta.
    theta = 0.0;
  } else {
    // Zero-trace but nonzero matrix: recover a candidate phase from the
    // leading singular pair (if A = e^{i theta}|A|, then A v1 = e^{i theta} s1 v1).
    Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const ComplexVector v1 = svd.matrixV().col(0);
    const ComplexVector u1 = svd.matrixU().col(0);
    theta = std::arg(v1.dot(u1));  // v1^dagger u1
  }

  const ComplexMatrix residual =
      a - std::polar(1.0, theta) * matrix_abs(a);
  if (residual.norm() <= tolerance * scale) {
    return theta;
  }
  return std::nullopt;
}

}  // namespace qslkit
