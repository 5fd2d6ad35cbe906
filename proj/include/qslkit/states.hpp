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

#include <vector>

#include "qslkit/matcore.hpp"

namespace qslkit {

// Hermitian, PSD, unit-trace matrix with a cached spectral decomposition.
// Inputs are accepted with Hermiticity drift up to 1e-10 and re-symmetrized.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& matrix);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

  // Descending eigenvalues p_j with matching eigenvector columns.
  const RealVector& eigenvalues() const { return eigenvalues_; }
  const ComplexMatrix& eigenvectors() const { return eigenvectors_; }

  double purity() const { return purity_; }

  // Number of eigenvalues >= 1e-10.
  int rank() const { return rank_; }

  // Hermitian PSD square root, from the cached spectrum.
  ComplexMatrix sqrt() const;

  // Orthogonal projector onto the support (eigenvectors with p_j >= 1e-10).
  ComplexMatrix support_projector() const;

 private:
  ComplexMatrix matrix_;
  RealVector eigenvalues_;
  ComplexMatrix eigenvectors_;
  double purity_ = 0.0;
  int rank_ = 0;
};

// Hermitian matrix (units of energy, hbar = 1) with its eigendecomposition
// grouped into eigenspaces: eigenvalues within 1e-8 of each other form one
// level.
class Hamiltonian {
 public:
  struct Level {
    double energy;           // representative eigenvalue of the group
    ComplexMatrix basis;     // orthonormal columns spanning the eigenspace
    ComplexMatrix projector; // P_k = basis * basis^dagger
    int multiplicity;
  };

  explicit Hamiltonian(const ComplexMatrix& matrix);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const std::vector<Level>& levels() const { return levels_; }
  int level_count() const { return static_cast<int>(levels_.size()); }

  // Spectral extremes (all levels, populated or not).
  double min_energy() const { return levels_.front().energy; }
  double max_energy() const { return levels_.back().energy; }

  // U_t = sum_k e^{-i t E_k} P_k.
  ComplexMatrix propagator(double t) const;

  // Hamiltonian with the sign of every level flipped (generates the reversed
  // evolution).
  Hamiltonian negated() const;

 private:
  ComplexMatrix matrix_;
  std::vector<Level> levels_;
};

// Unit vector in H (x) H whose partial trace over the second factor
// reproduces the source state.
struct Purification {
  ComplexVector vector;
  DensityMatrix source;
};

/// rho_t = U_t rho U_t^dagger with U_t assembled from the level decomposition.
DensityMatrix evolve(const DensityMatrix& rho, const Hamiltonian& h, double t);

/// Uhlmann-Jozsa fidelity (tr|sqrt(rho1) sqrt(rho2)|)^2, clamped to [0, 1].
double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// Canonical purification sum_j sqrt(p_j) |psi_j> (x) |e_j> with |e_j> the
/// standard basis of the second factor.
Purification purify(const DensityMatrix& rho);

/// |<w|w_t>|^2 for the evolved purification, computed as |tr(rho U_t)|^2.
double purified_overlap(const Purification& w, const Hamiltonian& h, double t);

/// E = tr(rho H).
double expected_energy(const DensityMatrix& rho, const Hamiltonian& h);

/// Indices k with tr(P_k rho) > tolerance, ascending in energy.
std::vector<int> populated_levels(const DensityMatrix& rho, const Hamiltonian& h,
                                  double tolerance = tol::population);

/// tr_2 |w><w| for a vector on H (x) H with dim(H) = dim.
ComplexMatrix partial_trace_second(const ComplexVector& w, int dim);

}  // namespace qslkit
