// Copyright 2026 The geoqm Authors
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

#include "geoqm/linops.hpp"

namespace geoqm {

/// Seeded source of random test objects. Sequences are reproducible for a
/// fixed seed on a fixed standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0);
  double normal();
  cplx complex_normal();

  ComplexVector gaussian_vector(Eigen::Index n);
  StateVector unit_state(Eigen::Index n);
  /// GUE-like Hermitian matrix with O(1) entries.
  HermitianOperator hermitian(Eigen::Index n);
  /// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
  ComplexMatrix unitary(Eigen::Index n);
  /// Full-rank density matrix G G^dagger / Tr.
  DensityState density(Eigen::Index n);

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace geoqm
