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

#include "qslkit/mlbound.hpp"
#include "qslkit/states.hpp"

namespace qslkit {

// Bloch-sphere coordinates of a qubit state in the energy eigenbasis:
//   x = <E1|rho|E0> + <E0|rho|E1>,
//   y = i (<E1|rho|E0> - <E0|rho|E1>),
//   z = <E1|rho|E1> - <E0|rho|E0>.
// The squared length x^2 + y^2 + z^2 equals 2 purity - 1, and omega = E1 - E0
// is the angular speed of the precession about the z-axis.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double purity = 1.0;
  double omega = 0.0;
};

// Minimum of the purity-resolved objective
//   f(z) = (1+z) arcsin sqrt((1-delta)/(2 purity - 1 - z^2))
// over the domain z^2 <= delta + 2 purity - 2.
struct QubitObjectiveMinimum {
  double delta = 0.0;
  double purity = 1.0;
  double z_min = 0.0;
  double alpha_p = 0.0;  // the minimal objective value
};

/// Bloch coordinates of a two-level state in the eigenbasis of H. Throws
/// NotQubitError unless both operands are two-dimensional and
/// DegenerateHamiltonianError if H has a single energy level.
BlochVector bloch_from_state(const DensityMatrix& rho, const Hamiltonian& h);

/// Inverse of bloch_from_state: the state with the given coordinates in H's
/// eigenbasis. Throws OutsideBallError if the vector is longer than 1 (up to
/// 1e-12), plus the qubit/degeneracy errors of bloch_from_state.
DensityMatrix state_from_bloch(const BlochVector& b, const Hamiltonian& h);

/// Fidelity between two states of equal purity on the same unitary orbit,
/// (3 + r1.r2 - 2 purity) / 2. Throws PurityMismatchError when the purities
/// differ by more than 1e-10; unequal-purity pairs belong to the general
/// fidelity instead.
double hubner_fidelity(const BlochVector& b1, const BlochVector& b2);

/// Angle subtended by the xy-projections of two Bloch vectors on the same
/// precession orbit (equal purity and z-component):
/// arccos((r1.r2 - z^2)/(2 purity - 1 - z^2)), with the argument clamped to
/// [-1, 1] against roundoff. Dividing by omega turns it into the evolution
/// time, first passage within a half-period. Throws DomainError when the
/// vectors have no xy-component to project.
double precession_angle(const BlochVector& b1, const BlochVector& b2);

/// Minimum of the purity-resolved objective over its closed domain, located
/// by a dense grid scan (1e5 points) with golden-section refinement; the
/// minimizer's uniqueness is only established at purity 1, hence the global
/// method. Reduces to the pure-state alpha at purity 1. Throws
/// InfeasibleFidelityError when delta < 2 (1 - purity), the fidelity floor of
/// a unitary orbit at that purity, and DomainError for arguments outside
/// [1/2, 1] x [0, 1].
QubitObjectiveMinimum qubit_alpha(double delta, double purity);

/// tau >= qubit_alpha(delta, purity).alpha_p / (E - E0) with E0 the ground
/// energy of H. Tight for every purity, unlike the general bound, and equal
/// to it at purity 1. Errors as qubit_alpha plus NotQubitError and
/// DegenerateHamiltonianError.
BoundReport qubit_ml_bound(const DensityMatrix& rho, const Hamiltonian& h,
                           double delta);

/// The purity-resolved minimal-time state: Bloch vector
/// (sqrt(2 purity - 1 - z^2), 0, z) with z the qubit_alpha minimizer. Reaches
/// fidelity delta in exactly alpha_p / (E - E0). Errors as qubit_alpha plus
/// the qubit/degeneracy errors.
DensityMatrix construct_saturating_qubit(double delta, double purity,
                                         const Hamiltonian& h);

}  // namespace qslkit
