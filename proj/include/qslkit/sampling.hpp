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

#include <cstdint>
#include <random>
#include <vector>

#include "qslkit/states.hpp"

namespace qslkit {

// Seeded source of random states, Hamiltonians, and unitaries. One generator
// per instance; a fixed seed reproduces the whole draw sequence, which keeps
// validation campaigns and their reports deterministic.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  // inclusive bounds

  // Haar-distributed unitary: QR of a complex Gaussian matrix with the
  // phases of R's diagonal absorbed into Q.
  ComplexMatrix random_unitary(int dim);

  // Haar-distributed unit vector.
  ComplexVector random_pure(int dim);

  // Generically full-rank state: flat-Dirichlet spectrum in a Haar-random
  // eigenbasis.
  DensityMatrix random_density(int dim);

  // Nondegenerate Hamiltonian: eigenvalues drawn uniformly over [0, spread]
  // (redrawn until all gaps clear 1e-6 spread) in a Haar-random eigenbasis.
  Hamiltonian random_hamiltonian(int dim, double spread = 1.0);

  // Hamiltonian whose k-th level has the requested multiplicity; the level
  // energies increase with gaps drawn from [1/2, 3/2], so the levels stay
  // well separated.
  Hamiltonian random_degenerate_hamiltonian(const std::vector<int>& multiplicities);

 private:
  std::mt19937_64 rng_;
};

}  // namespace qslkit
