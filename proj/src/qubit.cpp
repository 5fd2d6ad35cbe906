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

#include "qslkit/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qslkit/errors.hpp"

namespace qslkit {

namespace {

constexpr double kFeasibilitySlack = 1e-12;

void require_qubit(const DensityMatrix& rho, const Hamiltonian& h) {
  if (rho.dim() != 2 || h.dim() != 2) {
    throw NotQubitError("operands must be two-dimensional");
  }
  if (h.level_count() < 2) {
    throw DegenerateHamiltonianError("the two energy levels coincide");
  }
}

void require_qubit(const Hamiltonian& h) {
  if (h.dim() != 2) {
    throw NotQubitError("Hamiltonian must be two-dimensional");
  }
  if (h.level_count() < 2) {
    throw DegenerateHamiltonianError("the two energy levels coincide");
  }
}

// Objective (1+z) arcsin sqrt((1-delta)/(2p-1-z^2)). The argument of the
// arcsin is clamped into [0, 1]: it exceeds 1 only outside the domain, and
// the 0/0 at delta = 1 on the purity sphere resolves to 0.
double purity_objective(double delta, double purity, double z) {
  const double denom = std::max(2.0 * purity - 1.0 - z * z, 1e-300);
  const double arg = std::clamp((1.0 - delta) / denom, 0.0, 1.0);
  return (1.0 + z) * std::asin(std::sqrt(arg));
}

// Extended-precision twin for the refinement stage. Around the minimum the
// objective is flat to within double roundoff over a ~1e-8 wide basin, so
// value comparisons in double cannot place the minimizer more tightly than
// that; the long-double floor shrinks the basin to ~3e-10.
long double purity_objective_ld(long double delta, long double purity,
                                long double z) {
  const long double denom = std::max(2.0L * purity - 1.0L - z * z, 1e-300L);
  const long double arg =
      std::clamp((1.0L - delta) / denom, 0.0L, 1.0L);
  return (1.0L + z) * std::asin(std::sqrt(arg));
}

}  // namespace

BlochVector bloch_from_state(const DensityMatrix& rho, const Hamiltonian& h) {
  require_qubit(rho, h);
  const ComplexVector e0 = h.levels()[0].basis.col(0);
  const ComplexVector e1 = h.levels()[1].basis.col(0);
  const Complex c = e0.dot(rho.matrix() * e1);  // <E0|rho|E1>
  BlochVector b;
  b.x = 2.0 * c.real();
  b.y = 2.0 * c.imag();
  b.z = (e1.dot(rho.matrix() * e1) - e0.dot(rho.matrix() * e0)).real();
  b.purity = rho.purity();
  b.omega = h.levels()[1].energy - h.levels()[0].energy;
  return b;
}

DensityMatrix state_from_bloch(const BlochVector& b, const Hamiltonian& h) {
  require_qubit(h);
  const double len = std::sqrt(b.x * b.x + b.y * b.y + b.z * b.z);
  if (len > 1.0 + 1e-12) {
    throw OutsideBallError("Bloch vector length " + std::to_string(len) +
                           " exceeds 1");
  }
  ComplexMatrix in_eigenbasis(2, 2);
  in_eigenbasis(0, 0) = Complex((1.0 - b.z) / 2.0, 0.0);
  in_eigenbasis(1, 1) = Complex((1.0 + b.z) / 2.0, 0.0);
  in_eigenbasis(0, 1) = Complex(b.x / 2.0, b.y / 2.0);
  in_eigenbasis(1, 0) = std::conj(in_eigenbasis(0, 1));
  ComplexMatrix basis(2, 2);
  basis.col(0) = h.levels()[0].basis.col(0);
  basis.col(1) = h.levels()[1].basis.col(0);
  return DensityMatrix(basis * in_eigenbasis * basis.adjoint());
}

double hubner_fidelity(const BlochVector& b1, const BlochVector& b2) {
  if (std::abs(b1.purity - b2.purity) > 1e-10) {
    throw PurityMismatchError("states must have equal purity");
  }
  const double dot = b1.x * b2.x + b1.y * b2.y + b1.z * b2.z;
  const double purity = 0.5 * (b1.purity + b2.purity);
  return std::clamp(0.5 * (3.0 + dot - 2.0 * purity), 0.0, 1.0);
}

double precession_angle(const BlochVector& b1, const BlochVector& b2) {
  const double planar = 2.0 * b1.purity - 1.0 - b1.z * b1.z;
  if (planar <= 1e-14) {
    throw DomainError("Bloch vector has no xy-component");
  }
  const double dot = b1.x * b2.x + b1.y * b2.y + b1.z * b2.z;
  return std::acos(std::clamp((dot - b1.z * b1.z) / planar, -1.0, 1.0));
}

QubitObjectiveMinimum qubit_alpha(double delta, double purity) {
  if (!(purity >= 0.5 - kFeasibilitySlack && purity <= 1.0 + kFeasibilitySlack)) {
    throw DomainError("purity must lie in [1/2, 1]");
  }
  purity = std::clamp(purity, 0.5, 1.0);
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw DomainError("delta must lie in [0, 1]");
  }
  const double floor = 2.0 * (1.0 - purity);
  if (delta < floor - kFeasibilitySlack) {
    throw InfeasibleFidelityError(
        "fidelity " + std::to_string(delta) + " is below the orbit floor " +
        std::to_string(floor) + " at this purity");
  }

  QubitObjectiveMinimum result;
  result.delta = delta;
  result.purity = purity;

  const double span = std::max(0.0, delta + 2.0 * purity - 2.0);
  const double s = std::sqrt(span);
  if (s <= 1e-15) {  // single-point domain
    result.z_min = 0.0;
    result.alpha_p = purity_objective(delta, purity, 0.0);
    return result;
  }

  // Dense scan of the closed domain [-s, s]; uniqueness of the minimizer is
  // only known at purity 1, so no local method can be trusted on its own.
  const int n = 100000;
  int best = 0;
  double best_value = purity_objective(delta, purity, -s);
  for (int i = 1; i <= n; ++i) {
    const double z = -s + 2.0 * s * static_cast<double>(i) / n;
    const double value = purity_objective(delta, purity, z);
    if (value < best_value) {
      best_value = value;
      best = i;
    }
  }

  // Golden-section refinement on the bracket around the best grid point,
  // evaluated in long double so the flat roundoff basin does not limit the
  // minimizer's placement.
  const double step = 2.0 * s / n;
  long double lo = std::max(-s, -s + (best - 1) * step);
  long double hi = std::min(s, -s + (best + 1) * step);
  const long double golden = 0.6180339887498948482L;
  long double c = hi - golden * (hi - lo);
  long double d = lo + golden * (hi - lo);
  long double fc = purity_objective_ld(delta, purity, c);
  long double fd = purity_objective_ld(delta, purity, d);
  while (hi - lo > 1e-13L) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - golden * (hi - lo);
      fc = purity_objective_ld(delta, purity, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + golden * (hi - lo);
      fd = purity_objective_ld(delta, purity, d);
    }
  }
  result.z_min = static_cast<double>(0.5L * (lo + hi));
  result.alpha_p = purity_objective(delta, purity, result.z_min);
  if (result.alpha_p > best_value) {
    result.z_min = -s + best * step;
    result.alpha_p = best_value;
  }
  return result;
}

BoundReport qubit_ml_bound(const DensityMatrix& rho, const Hamiltonian& h,
                           double delta) {
  require_qubit(rho, h);
  const QubitObjectiveMinimum minimum = qubit_alpha(delta, rho.purity());
  BoundReport report;
  report.variant = BoundReport::Variant::standard;
  report.delta = delta;
  report.energy = expected_energy(rho, h);
  report.ground_energy = h.levels()[0].energy;
  report.top_energy = h.levels()[1].energy;
  const double gap = report.energy - report.ground_energy;
  if (gap <= 1e-12) {
    report.unbounded = delta < 1.0;
    report.tau_lower = 0.0;
  } else {
    report.tau_lower = minimum.alpha_p / gap;
  }
  return report;
}

DensityMatrix construct_saturating_qubit(double delta, double purity,
                                         const Hamiltonian& h) {
  require_qubit(h);
  const QubitObjectiveMinimum minimum = qubit_alpha(delta, purity);
  BlochVector b;
  b.z = minimum.z_min;
  b.x = std::sqrt(std::max(0.0, 2.0 * purity - 1.0 - b.z * b.z));
  b.y = 0.0;
  b.purity = purity;
  b.omega = h.levels()[1].energy - h.levels()[0].energy;
  return state_from_bloch(b, h);
}

}  // namespace qslkit
