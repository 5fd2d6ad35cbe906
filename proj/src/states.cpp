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

#include "qslkit/states.hpp"

#include <algorithm>
#include <cmath>

namespace qslkit {

namespace {

void require_same_dim(int a, int b) {
  if (a != b) {
    throw DimMismatchError("dimension mismatch: " + std::to_string(a) +
                           " vs " + std::to_string(b));
  }
}

void require_finite(const ComplexMatrix& m) {
  if (!m.allFinite()) {
    throw DomainError("matrix has non-finite entries");
  }
}

}  // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix& matrix) {
  require_finite(matrix);
  require_hermitian(matrix);
  matrix_ = 0.5 * (matrix + matrix.adjoint());

  const double trace = matrix_.trace().real();
  if (std::abs(trace - 1.0) > tol::hermiticity) {
    throw DomainError("density matrix trace " + std::to_string(trace) +
                      " differs from 1");
  }

  HermitianEig eig = hermitian_eig(matrix_);
  const Eigen::Index n = eig.eigenvalues.size();
  eigenvalues_.resize(n);
  eigenvectors_.resize(n, n);
  // Flip to descending order.
  for (Eigen::Index i = 0; i < n; ++i) {
    eigenvalues_[i] = eig.eigenvalues[n - 1 - i];
    eigenvectors_.col(i) = eig.eigenvectors.col(n - 1 - i);
  }

  purity_ = 0.0;
  rank_ = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (eigenvalues_[i] < -tol::psd_clamp) {
      throw NotPsdError("density matrix eigenvalue " +
                        std::to_string(eigenvalues_[i]) + " is negative");
    }
    eigenvalues_[i] = std::max(eigenvalues_[i], 0.0);
    purity_ += eigenvalues_[i] * eigenvalues_[i];
    if (eigenvalues_[i] >= tol::rank_cutoff) ++rank_;
  }
}

ComplexMatrix DensityMatrix::sqrt() const {
  // Eigenvalues below the rank cutoff are zeroed, matching the support
  // projector: the square root would amplify eigensolver noise of order eps
  // into spurious directions of order sqrt(eps) on rank-deficient states.
  RealVector roots(eigenvalues_.size());
  for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i) {
    roots[i] =
        eigenvalues_[i] >= tol::rank_cutoff ? std::sqrt(eigenvalues_[i]) : 0.0;
  }
  return eigenvectors_ * roots.asDiagonal() * eigenvectors_.adjoint();
}

ComplexMatrix DensityMatrix::support_projector() const {
  ComplexMatrix p = ComplexMatrix::Zero(dim(), dim());
  for (int j = 0; j < dim(); ++j) {
    if (eigenvalues_[j] >= tol::rank_cutoff) {
      p += eigenvectors_.col(j) * eigenvectors_.col(j).adjoint();
    }
  }
  return p;
}

Hamiltonian::Hamiltonian(const ComplexMatrix& matrix) {
  require_finite(matrix);
  require_hermitian(matrix);
  matrix_ = 0.5 * (matrix + matrix.adjoint());

  HermitianEig eig = hermitian_eig(matrix_);
  const Eigen::Index n = eig.eigenvalues.size();

  // Group ascending eigenvalues into levels by the degeneracy tolerance.
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n &&
           eig.eigenvalues[end] - eig.eigenvalues[end - 1] <= tol::level_grouping) {
      ++end;
    }
    Level level;
    level.multiplicity = static_cast<int>(end - start);
    level.energy =
        eig.eigenvalues.segment(start, end - start).mean();
    level.basis = eig.eigenvectors.middleCols(start, end - start);
    level.projector = level.basis * level.basis.adjoint();
    levels_.push_back(std::move(level));
    start = end;
  }
}

ComplexMatrix Hamiltonian::propagator(double t) const {
  ComplexMatrix u = ComplexMatrix::Zero(dim(), dim());
  for (const Level& level : levels_) {
    u += std::polar(1.0, -t * level.energy) * level.projector;
  }
  return u;
}

Hamiltonian Hamiltonian::negated() const {
  return Hamiltonian(ComplexMatrix(-matrix_));
}

DensityMatrix evolve(const DensityMatrix& rho, const Hamiltonian& h, double t) {
  require_same_dim(rho.dim(), h.dim());
  if (!std::isfinite(t)) {
    throw DomainError("evolution time must be finite");
  }
  const ComplexMatrix u = h.propagator(t);
  return DensityMatrix(u * rho.matrix() * u.adjoint());
}

double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  require_same_dim(rho1.dim(), rho2.dim());
  const double root = trace_norm(rho1.sqrt() * rho2.sqrt());
  return std::clamp(root * root, 0.0, 1.0);
}

Purification purify(const DensityMatrix& rho) {
  const int d = rho.dim();
  ComplexVector w = ComplexVector::Zero(d * d);
  for (int j = 0; j < d; ++j) {
    const double p = rho.eigenvalues()[j];
    if (p <= 0.0) continue;
    const double amp = std::sqrt(p);
    for (int a = 0; a < d; ++a) {
      w[a * d + j] += amp * rho.eigenvectors()(a, j);
    }
  }
  w /= w.norm();
  return Purification{std::move(w), rho};
}

double purified_overlap(const Purification& w, const Hamiltonian& h, double t) {
  require_same_dim(w.source.dim(), h.dim());
  // <w|U_t (x) 1|w> = tr(rho U_t) for any purification of rho.
  const Complex overlap = (w.source.matrix() * h.propagator(t)).trace();
  return std::norm(overlap);
}

double expected_energy(const DensityMatrix& rho, const Hamiltonian& h) {
  require_same_dim(rho.dim(), h.dim());
  const Complex e = (rho.matrix() * h.matrix()).trace();
  if (std::abs(e.imag()) > tol::hermiticity) {
    throw DomainError("expected energy has imaginary residual " +
                      std::to_string(e.imag()));
  }
  return e.real();
}

std::vector<int> populated_levels(const DensityMatrix& rho, const Hamiltonian& h,
                                  double tolerance) {
  require_same_dim(rho.dim(), h.dim());
  std::vector<int> populated;
  for (int k = 0; k < h.level_count(); ++k) {
    const double population =
        (h.levels()[k].projector * rho.matrix()).trace().real();
    if (population > tolerance) populated.push_back(k);
  }
  return populated;
}

ComplexMatrix partial_trace_second(const ComplexVector& w, int dim) {
  if (w.size() != static_cast<Eigen::Index>(dim) * dim) {
    throw DimMismatchError("purification vector has wrong length");
  }
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  for (int a = 0; a < dim; ++a) {
    for (int ap = 0; ap < dim; ++ap) {
      Complex sum = 0.0;
      for (int b = 0; b < dim; ++b) {
        sum += w[a * dim + b] * std::conj(w[ap * dim + b]);
      }
      rho(a, ap) = sum;
    }
  }
  return rho;
}

}  // namespace qslkit
