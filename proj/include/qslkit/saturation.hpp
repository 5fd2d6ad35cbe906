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

#include <optional>
#include <utility>
#include <vector>

#include "qslkit/mlbound.hpp"
#include "qslkit/states.hpp"

namespace qslkit {

// Recipe for a rank-r state that meets the speed-limit bound with equality:
// two energy levels of the Hamiltonian, a target fidelity, weights p_j, and r
// pairs of orthonormal eigenvectors, one drawn from each level's eigenspace.
struct SaturatingSpec {
  Hamiltonian hamiltonian;
  int level0 = 0;  // index into hamiltonian.levels() of the lower level
  int level1 = 1;  // index of the upper level (the top level for dual forms)
  double delta = 0.0;
  std::vector<double> weights;  // p_j > 0, summing to 1
  // (|E0^j>, |E1^j>) with the first component in level0's eigenspace and the
  // second in level1's; orthonormal within each family.
  std::vector<std::pair<ComplexVector, ComplexVector>> pairing;
};

// One structural criterion together with its measured residual.
struct ConditionResult {
  bool pass = false;
  double residual = 0.0;
};

// Verdict of check_saturation: the three structural criteria, the operator
// identities on the support, and the two scalar equalities (fidelity reached
// and bound met) that define saturation at the tested time.
struct SaturationReport {
  double tau_star = 0.0;  // the time the state was tested at
  double delta = 0.0;

  // (i) support confined to two eigenspaces: residual is the Frobenius norm
  // of (1 - P0 - P1) rho, and more than two populated levels also fails.
  ConditionResult condition_i;
  // (ii) every support eigenvector splits its weight (1-z)/2 : (1+z)/2
  // between the two eigenspaces; residual is the worst population mismatch.
  ConditionResult condition_ii;
  std::vector<double> eigenvector_residuals;  // per-eigenvector, for (ii)
  // (iii) the normalized eigenspace components of distinct support
  // eigenvectors are mutually orthogonal; residual is the largest overlap.
  ConditionResult condition_iii;

  // Common phase theta with sqrt(rho) U_tau sqrt(rho) = e^{i theta}
  // |sqrt(rho) U_tau sqrt(rho)|, when one exists within the tolerance.
  std::optional<double> compression_phase;
  // || P U_tau P - sqrt(delta) e^{i theta} P ||_F; measured against the
  // least-squares multiple of P instead when no common phase was found.
  double compression_residual = 0.0;
  // Measured coefficients of the eigenspace-projector compressions
  // P P_i P = q_i P, and their residuals against the closed forms
  //   q0 = (sqrt(delta) e^{i theta} - e^{-i tau E1}) / (e^{-i tau E0} - e^{-i tau E1}),
  //   q1 = (sqrt(delta) e^{i theta} - e^{-i tau E0}) / (e^{-i tau E1} - e^{-i tau E0}).
  double q0 = 0.0;
  double q1 = 0.0;
  double q0_residual = 0.0;
  double q1_residual = 0.0;

  double fidelity_error = 0.0;  // | F(rho, rho_tau) - delta |
  double bound_error = 0.0;     // | tau (E - E0) - alpha(delta) |

  // True iff (i)-(iii) pass and both scalar equalities hold within tolerance.
  bool saturates = false;
};

/// The z at which the bound objective for the given fidelity attains its
/// minimum; every saturating eigenvector splits its populations by this value.
double z_for_delta(double delta);

/// rho = sum_j p_j |psi_j><psi_j| with
/// |psi_j> = sqrt((1-z)/2) |E0^j> + sqrt((1+z)/2) |E1^j>, z = z_for_delta.
/// The result reaches fidelity delta with itself in the minimal time allowed
/// by the speed limit. Throws LevelOrderError if the named levels are not
/// ascending, RankBoundViolationError if more pairs are requested than the
/// smaller eigenspace holds, and NonOrthogonalPairingError if the pairing
/// vectors are not orthonormal members of their eigenspaces (within 1e-10).
DensityMatrix construct_saturating_state(const SaturatingSpec& spec);

/// Swapped-amplitude form sqrt((1+z)/2) |E0^j> + sqrt((1-z)/2) |Em^j>, which
/// saturates the reversed-evolution bound alpha(delta) / (Em - E). Interpret
/// spec.level1 as the top level; validation matches
/// construct_saturating_state.
DensityMatrix construct_dual_saturating_state(const SaturatingSpec& spec);

/// Measures conditions (i)-(iii), the support-compression identities, the
/// fidelity actually reached at tau, and the bound equality tau (E - E0) =
/// alpha(delta), where E0 is the smallest populated eigenvalue. The two
/// reference eigenspaces are the lowest populated level and the most
/// populated of the remaining ones. Throws DimMismatchError on dimension
/// mismatch and DomainError for tau <= 0 or delta outside [0, 1].
SaturationReport check_saturation(const DensityMatrix& rho, const Hamiltonian& h,
                                  double tau, double delta,
                                  double tolerance = tol::saturation);

/// Convenience builder: pairing drawn from the leading basis columns of the
/// two eigenspaces, one pair per weight.
SaturatingSpec make_spec(const Hamiltonian& h, int level0, int level1,
                         double delta, std::vector<double> weights);

}  // namespace qslkit
