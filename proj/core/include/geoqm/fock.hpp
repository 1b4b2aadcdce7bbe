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

#include <optional>
#include <string>

#include "geoqm/linops.hpp"

namespace geoqm {

enum class WeylOrdering {
  symmetric,   // exp(i/hbar (x P + alpha Q))
  q_first,     // exp(i/hbar alpha Q) exp(i/hbar x P)
  p_first,     // exp(i/hbar x P) exp(i/hbar alpha Q)
};

/// Truncated Fock space span{|0>, .., |M-1>}. [a, a^dagger] = I holds except
/// in the last diagonal entry, which equals 1 - M.
class FockSpace {
 public:
  explicit FockSpace(Eigen::Index dim, double hbar = 1.0);

  [[nodiscard]] Eigen::Index dim() const noexcept { return m_; }
  [[nodiscard]] double hbar() const noexcept { return hbar_; }
  [[nodiscard]] const ComplexMatrix& annihilation() const noexcept { return a_; }
  [[nodiscard]] ComplexMatrix creation() const { return a_.adjoint(); }
  [[nodiscard]] ComplexMatrix number() const { return a_.adjoint() * a_; }
  /// sqrt(hbar/2) (a + a^dagger) and -i sqrt(hbar/2) (a - a^dagger).
  [[nodiscard]] ComplexMatrix position() const;
  [[nodiscard]] ComplexMatrix momentum() const;

  /// D(z) = exp(z a^dagger - z* a), unitary by construction.
  [[nodiscard]] ComplexMatrix displacement(cplx z) const;
  /// Weyl operator for phase-space vector (x, alpha) in the requested ordering.
  /// The orderings agree up to exp(-+ i x alpha / (2 hbar)) on levels far below M.
  [[nodiscard]] ComplexMatrix weyl(double x, double alpha, WeylOrdering ordering = WeylOrdering::symmetric) const;

 private:
  Eigen::Index m_;
  double hbar_;
  ComplexMatrix a_;
};

/// Phase by which an ordering differs from the symmetric one.
cplx ordering_phase(double x, double alpha, WeylOrdering ordering, double hbar = 1.0);

struct CoherentState {
  StateVector state;
  double tail_weight = 0.0;  // Poisson weight of levels >= M that was dropped
  std::optional<std::string> warning;
};

/// e^{-|z|^2/2} sum_n z^n / sqrt(n!) |n>, truncated and renormalised.
/// Warns when the dropped weight exceeds 1e-12 or |z| > sqrt(M)/4.
CoherentState coherent_state(cplx z, const FockSpace& fock);

/// <z|A|z>.
cplx berezin_symbol(const ComplexMatrix& a, cplx z, const FockSpace& fock);

/// exp(i H) for Hermitian H.
ComplexMatrix exp_i_hermitian(const HermitianOperator& h);

}  // namespace geoqm
