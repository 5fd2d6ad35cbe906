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

#include "qslkit/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "qslkit/errors.hpp"

namespace qslkit {

namespace {

ComplexMatrix complex_gaussian(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  return g;
}

}  // namespace

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

int Sampler::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

ComplexMatrix Sampler::random_unitary(int dim) {
  if (dim < 1) {
    throw DomainError("dimension must be positive");
  }
  const ComplexMatrix g = complex_gaussian(rng_, dim, dim);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the gauge so the distribution is the invariant one: rotate each
  // column by the phase of the matching diagonal entry of R.
  for (int j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    q.col(j) *= mag > 0.0 ? r(j, j) / mag : Complex(1.0, 0.0);
  }
  return q;
}

ComplexVector Sampler::random_pure(int dim) {
  if (dim < 1) {
    throw DomainError("dimension must be positive");
  }
  ComplexVector v = complex_gaussian(rng_, dim, 1).col(0);
  const double n = v.norm();
  if (n == 0.0) {
    v.setZero();
    v(0) = Complex(1.0, 0.0);
    return v;
  }
  return v / n;
}

DensityMatrix Sampler::random_density(int dim) {
  if (dim < 1) {
    throw DomainError("dimension must be positive");
  }
  // Flat Dirichlet spectrum: normalized exponential draws.
  std::exponential_distribution<double> expo(1.0);
  RealVector p(dim);
  double sum = 0.0;
  for (int i = 0; i < dim; ++i) {
    p(i) = expo(rng_);
    sum += p(i);
  }
  p /= sum;
  const ComplexMatrix u = random_unitary(dim);
  return DensityMatrix(u * p.asDiagonal() * u.adjoint());
}

Hamiltonian Sampler::random_hamiltonian(int dim, double spread) {
  if (dim < 1) {
    throw DomainError("dimension must be positive");
  }
  if (!(spread > 0.0)) {
    throw DomainError("spread must be positive");
  }
  std::vector<double> energies(dim);
  bool separated = false;
  while (!separated) {
    for (double& e : energies) {
      e = uniform(0.0, spread);
    }
    std::sort(energies.begin(), energies.end());
    separated = true;
    for (int i = 0; i + 1 < dim; ++i) {
      if (energies[i + 1] - energies[i] < 1e-6 * spread) {
        separated = false;
        break;
      }
    }
  }
  const ComplexMatrix u = random_unitary(dim);
  RealVector diag(dim);
  for (int i = 0; i < dim; ++i) {
    diag(i) = energies[i];
  }
  return Hamiltonian(u * diag.asDiagonal() * u.adjoint());
}

Hamiltonian Sampler::random_degenerate_hamiltonian(
    const std::vector<int>& multiplicities) {
  int dim = 0;
  for (int m : multiplicities) {
    if (m < 1) {
      throw DomainError("multiplicities must be positive");
    }
    dim += m;
  }
  if (dim < 1) {
    throw DomainError("at least one level is required");
  }
  const ComplexMatrix u = random_unitary(dim);
  RealVector diag(dim);
  double energy = uniform(0.0, 1.0);
  int offset = 0;
  for (int m : multiplicities) {
    for (int i = 0; i < m; ++i) {
      diag(offset + i) = energy;
    }
    offset += m;
    energy += uniform(0.5, 1.5);
  }
  return Hamiltonian(u * diag.asDiagonal() * u.adjoint());
}

}  // namespace qslkit
