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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace geoqm {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr cplx kI{0.0, 1.0};

/// Raised for any input that violates a documented precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kDensityTol = 1e-10;
inline constexpr double kUnitNormTol = 1e-12;

double max_abs(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);

/// A dense matrix checked for A = A^dagger (max-entry deviation <= 1e-12).
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix m);

  /// Projects onto the Hermitian part, (M + M^dagger)/2, without checking.
  static HermitianOperator hermitian_part(const ComplexMatrix& m);

  [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return m_; }
  [[nodiscard]] Eigen::Index dim() const noexcept { return m_.rows(); }

 private:
  struct Unchecked {};
  HermitianOperator(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

enum class Normalization { raw, unit };

class StateVector {
 public:
  /// Raw amplitudes, any nonzero or zero norm.
  explicit StateVector(ComplexVector amplitudes);
  /// Rescales to unit norm; throws on the zero vector.
  static StateVector normalized(const ComplexVector& amplitudes);

  [[nodiscard]] const ComplexVector& amplitudes() const noexcept { return v_; }
  [[nodiscard]] Eigen::Index dim() const noexcept { return v_.size(); }
  [[nodiscard]] Normalization normalization() const noexcept { return norm_; }
  [[nodiscard]] double norm() const { return v_.norm(); }

 private:
  StateVector(ComplexVector amplitudes, Normalization n)
      : v_(std::move(amplitudes)), norm_(n) {}
  ComplexVector v_;
  Normalization norm_ = Normalization::raw;
};

/// Positive semidefinite, unit-trace operator. Eigenvalues in [-1e-10, 0)
/// are tolerated and treated as zero by every consumer.
class DensityState {
 public:
  explicit DensityState(ComplexMatrix rho);
  static DensityState pure(const StateVector& psi);

  [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return rho_; }
  [[nodiscard]] Eigen::Index dim() const noexcept { return rho_.rows(); }
  /// Ascending eigenvalues with the drift below zero clipped.
  [[nodiscard]] RealVector spectrum() const;

 private:
  ComplexMatrix rho_;
};

struct EigenDecomposition {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // columns; first non-negligible entry real positive
};

EigenDecomposition eig_herm(const HermitianOperator& a);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);
/// Hilbert-Schmidt pairing Tr(A^dagger B).
cplx trace_inner(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix outer(const ComplexVector& psi);

/// Principal square root of a PSD matrix; eigenvalues in [-1e-10, 0) are
/// clipped, anything more negative is rejected.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m);

/// Applies f to the spectrum of a Hermitian matrix.
template <class F>
ComplexMatrix spectral_apply(const HermitianOperator& a, F f) {
  const auto dec = eig_herm(a);
  RealVector fv(dec.values.size());
  for (Eigen::Index i = 0; i < fv.size(); ++i) fv(i) = f(dec.values(i));
  return dec.vectors * fv.asDiagonal() * dec.vectors.adjoint();
}

enum class Subsystem { first, second };

struct BipartiteDims {
  Eigen::Index first = 2;
  Eigen::Index second = 2;
};

/// Traces out `traced`, returning the operator on the other factor.
ComplexMatrix partial_trace(const ComplexMatrix& rho, BipartiteDims dims,
                            Subsystem traced);
DensityState partial_trace(const DensityState& rho, BipartiteDims dims,
                           Subsystem traced);

/// U(t) = exp(-i H t / hbar).
ComplexMatrix propagator_matrix(const HermitianOperator& h, double t,
                                double hbar = 1.0);
StateVector evolve(const HermitianOperator& h, const StateVector& psi0,
                   double t, double hbar = 1.0);

/// sigma_0 (identity) through sigma_3.
const ComplexMatrix& pauli(int k);

bool is_unitary(const ComplexMatrix& u, double tol = 1e-10);

}  // namespace geoqm
