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

#include "qslkit/mlbound.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace qslkit {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// delta values within this of 0 or 1 take the analytic boundary results;
// the arcsin/sqrt conditioning degrades right at the domain edges.
constexpr double kBoundaryBand = 1e-12;

void require_delta(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw DomainError("fidelity target must lie in [0, 1], got " +
                      std::to_string(delta));
  }
}

double first_crossing_by_bisection(const std::function<double(double)>& g,
                                   double lo, double hi) {
  // g(lo) > 0 >= g(hi); shrink to 1e-12 time resolution.
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double golden_section_argmin(const std::function<double(double)>& g,
                             double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double gc = g(c), gd = g(d);
  while (b - a > 1e-12) {
    if (gc < gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - kInvPhi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + kInvPhi * (b - a);
      gd = g(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double objective(double delta, double z) {
  require_delta(delta);
  if (z * z > delta + 1e-14) {
    throw DomainError("z^2 exceeds delta");
  }
  if (z * z >= 1.0) {
    throw DomainError("z^2 must be below 1");
  }
  const double arg = std::clamp((1.0 - delta) / (1.0 - z * z), 0.0, 1.0);
  return (1.0 + z) * std::asin(std::sqrt(arg));
}

double objective_derivative(double delta, double z) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("derivative formula needs delta in (0, 1)");
  }
  const double root = std::sqrt(delta);
  if (!(z > -root && z < 0.0)) {
    throw DomainError("derivative formula needs z in (-sqrt(delta), 0)");
  }
  const double arg = std::clamp((1.0 - delta) / (1.0 - z * z), 0.0, 1.0);
  return std::asin(std::sqrt(arg)) +
         z * std::sqrt(1.0 - delta) /
             ((1.0 - z) * std::sqrt(delta - z * z));
}

ObjectiveMinimum minimize_objective(double delta) {
  require_delta(delta);
  if (delta <= kBoundaryBand) {
    // Domain collapses to {0}.
    return ObjectiveMinimum{delta, 0.0, kHalfPi, false};
  }
  if (delta >= 1.0 - kBoundaryBand) {
    // f_1 vanishes identically; z_min = -1 by continuity convention.
    return ObjectiveMinimum{delta, -1.0, 0.0, true};
  }

  // The derivative diverges to -inf at -sqrt(delta) and tends to
  // arcsin(sqrt(1-delta)) > 0 at 0, with a single sign change between.
  const double root = std::sqrt(delta);
  double lo = -root * (1.0 - 1e-12);
  double hi = -1e-15;
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    if (objective_derivative(delta, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double z_min = 0.5 * (lo + hi);
  return ObjectiveMinimum{delta, z_min, objective(delta, z_min), false};
}

double alpha(double delta) { return minimize_objective(delta).alpha; }

BoundReport ml_bound(const DensityMatrix& rho, const Hamiltonian& h,
                     double delta) {
  require_delta(delta);
  const std::vector<int> populated = populated_levels(rho, h);
  if (populated.empty()) {
    throw DomainError("state populates no level of the Hamiltonian");
  }

  BoundReport report;
  report.variant = BoundReport::Variant::standard;
  report.delta = delta;
  report.energy = expected_energy(rho, h);
  report.ground_energy = h.levels()[populated.front()].energy;
  report.top_energy = h.levels()[populated.back()].energy;

  const double gap = report.energy - report.ground_energy;
  if (gap <= 1e-12) {
    // Only the ground level carries weight: the state is stationary in the
    // populated-spectrum sense and cannot reach fidelity delta < 1.
    report.unbounded = delta < 1.0;
    report.tau_lower = 0.0;
    return report;
  }
  report.unbounded = false;
  report.tau_lower = alpha(delta) / gap;
  return report;
}

BoundReport dual_ml_bound(const DensityMatrix& rho, const Hamiltonian& h,
                          double delta) {
  BoundReport reversed = ml_bound(rho, h.negated(), delta);
  // Map the reversed-Hamiltonian quantities back to the original spectrum.
  BoundReport report;
  report.variant = BoundReport::Variant::dual;
  report.delta = delta;
  report.energy = -reversed.energy;
  report.ground_energy = -reversed.top_energy;
  report.top_energy = -reversed.ground_energy;
  report.unbounded = reversed.unbounded;
  report.tau_lower = reversed.tau_lower;
  return report;
}

std::optional<double> minimal_time_to_fidelity(const DensityMatrix& rho,
                                               const Hamiltonian& h,
                                               double delta, double horizon) {
  require_delta(delta);
  if (!(horizon > 0.0)) {
    throw DomainError("horizon must be positive");
  }
  const double spread = h.max_energy() - h.min_energy();
  if (spread <= tol::level_grouping) {
    throw DegenerateHamiltonianError(
        "Hamiltonian has a single level; no dynamics");
  }
  if (delta >= 1.0) {
    // Fidelity starts at 1; no strict crossing exists.
    return std::nullopt;
  }

  const auto g = [&](double t) { return fidelity(rho, evolve(rho, h, t)) - delta; };

  // Nyquist-style step: oscillation frequencies are bounded by the spectral
  // spread, so this step cannot jump over the first crossing.
  const double step = std::numbers::pi / (50.0 * spread);
  const double touch_tol = 1e-9;

  double t_prev = 0.0;
  double g_prev = 1.0 - delta;  // g(0), strictly positive here
  double g_before_prev = g_prev;
  while (t_prev < horizon) {
    const double t_next = std::min(t_prev + step, horizon);
    const double g_next = g(t_next);
    if (g_prev > 0.0 && g_next <= 0.0) {
      return first_crossing_by_bisection(g, t_prev, t_next);
    }
    // Tangential touch: the fidelity can reach delta without crossing it
    // (e.g. delta = 0, where the fidelity is nonnegative). Refine any local
    // minimum of g and accept it if it comes within touch tolerance of zero.
    if (g_prev <= g_before_prev && g_prev <= g_next && t_prev > 0.0) {
      const double lo = std::max(0.0, t_prev - step);
      const double t_min = golden_section_argmin(g, lo, t_next);
      if (std::abs(g(t_min)) <= touch_tol) {
        return t_min;
      }
    }
    g_before_prev = g_prev;
    g_prev = g_next;
    t_prev = t_next;
  }
  return std::nullopt;
}

}  // namespace qslkit
