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

#include "qslkit/states.hpp"

namespace qslkit {

// Result of minimizing the objective f_delta over z^2 <= delta.
struct ObjectiveMinimum {
  double delta;
  double z_min;    // in [-sqrt(delta), 0]; -1 by convention when delta = 1
  double alpha;    // f_delta(z_min), in [0, pi/2]
  bool boundary;   // true only for the degenerate delta = 1 case
};

// Evaluated speed-limit bound. `unbounded` marks the stationary-in-energy
// edge (E = E0 for the standard form, E = E_m for the dual) with delta < 1,
// where no finite time bound applies; tau_lower is meaningful only when
// unbounded is false.
struct BoundReport {
  enum class Variant { standard, dual };
  Variant variant = Variant::standard;
  double delta = 0.0;
  double energy = 0.0;         // E = tr(rho H)
  double ground_energy = 0.0;  // E0, smallest populated eigenvalue
  double top_energy = 0.0;     // E_m, largest populated eigenvalue
  bool unbounded = false;
  double tau_lower = 0.0;
};

/// f_delta(z) = (1+z) arcsin sqrt((1-delta)/(1-z^2)) on z^2 <= delta.
double objective(double delta, double z);

/// d/dz f_delta on the open interval (-sqrt(delta), 0).
double objective_derivative(double delta, double z);

/// Locates the unique minimum of f_delta by bisecting its derivative.
ObjectiveMinimum minimize_objective(double delta);

/// alpha(delta) = min f_delta; strictly decreasing from pi/2 to 0.
double alpha(double delta);

/// tau >= alpha(delta) / (E - E0).
BoundReport ml_bound(const DensityMatrix& rho, const Hamiltonian& h, double delta);

/// tau >= alpha(delta) / (E_m - E); delegates to ml_bound under -H.
BoundReport dual_ml_bound(const DensityMatrix& rho, const Hamiltonian& h, double delta);

/// Earliest t in (0, horizon] with fidelity(rho, rho_t) = delta, located by a
/// grid scan (step pi / (50 (E_max - E_min))) followed by bisection, with a
/// golden-section fallback for tangential touches. Absent when the fidelity
/// never reaches delta within the horizon, and for delta = 1 (the fidelity
/// starts there; no strict crossing).
std::optional<double> minimal_time_to_fidelity(const DensityMatrix& rho,
                                               const Hamiltonian& h,
                                               double delta, double horizon);

}  // namespace qslkit
