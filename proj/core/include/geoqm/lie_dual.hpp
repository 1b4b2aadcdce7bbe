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

#include <functional>
#include <vector>

#include "geoqm/linops.hpp"

namespace geoqm {

/// Ordered Hermitian basis of u(n) with Tr(l_mu l_nu) = 2 delta_mu_nu.
class LieBasis {
 public:
  /// Validates count n^2, Hermiticity and trace orthonormality (1e-12).
  explicit LieBasis(std::vector<ComplexMatrix> mats);

  /// l_0 = sqrt(2/n) I, then for k = 2..n: for j < k the symmetric and
  /// antisymmetric (j,k) pair, then the k-th diagonal generator. n in {2,3,4}.
  static LieBasis gell_mann(int n);
  /// (sigma_k (x) tau_j) / sqrt(2) at index 4k + j.
  static LieBasis two_qubit_product();

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(mats_.size()); }
  [[nodiscard]] const ComplexMatrix& operator[](int mu) const { return mats_.at(static_cast<std::size_t>(mu)); }

  /// x_mu = Tr(X l_mu) / 2, real part for Hermitian X.
  [[nodiscard]] RealVector coefficients(const ComplexMatrix& x) const;
  [[nodiscard]] ComplexMatrix compose(const RealVector& coeffs) const;

 private:
  int n_ = 0;
  std::vector<ComplexMatrix> mats_;
};

/// [l_mu, l_nu] = 2i C_munurho l_rho and {l_mu, l_nu} = 2 d_munurho l_rho,
/// with rho running over the whole basis (the identity channel is rho = 0
/// for the Gell-Mann basis).
class StructureConstants {
 public:
  StructureConstants(int dim, std::vector<double> c, std::vector<double> d);

  [[nodiscard]] int dim() const noexcept { return dim_; }
  [[nodiscard]] double C(int mu, int nu, int rho) const { return c_[index(mu, nu, rho)]; }
  [[nodiscard]] double d(int mu, int nu, int rho) const { return d_[index(mu, nu, rho)]; }

  /// sum_rho (d + iC)_munurho l_rho, the reconstructed product l_mu l_nu.
  [[nodiscard]] ComplexMatrix product(const LieBasis& basis, int mu, int nu) const;
  /// Pi_munu(x) = C_munurho x_rho
  [[nodiscard]] RealMatrix poisson_tensor(const RealVector& x) const;
  /// R_munu(x) = d_munurho x_rho
  [[nodiscard]] RealMatrix jordan_tensor(const RealVector& x) const;

 private:
  [[nodiscard]] std::size_t index(int mu, int nu, int rho) const;
  int dim_;
  std::vector<double> c_;
  std::vector<double> d_;
};

StructureConstants structure_constants(const LieBasis& basis);

/// Element of u*(n), stored as a Hermitian matrix under the trace pairing.
class DualVector {
 public:
  explicit DualVector(ComplexMatrix xi);
  static DualVector from_coefficients(const LieBasis& basis, const RealVector& coeffs);

  [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return xi_; }
  [[nodiscard]] RealVector coefficients(const LieBasis& basis) const { return basis.coefficients(xi_); }
  /// <xi, X> = Tr(xi X)
  [[nodiscard]] cplx pair(const ComplexMatrix& x) const { return (xi_ * x).trace(); }

 private:
  ComplexMatrix xi_;
};

using DualFunction = std::function<double(const DualVector&)>;

/// Linear-function brackets from gradients (Hermitian matrices dF, dG):
/// {F,G}(xi) = Tr(xi (-i)[dF, dG]), so {alpha_u, alpha_v} = alpha_{-i[u,v]}.
double lie_poisson(const ComplexMatrix& dF, const ComplexMatrix& dG, const DualVector& xi);
/// R(xi)(dF, dG) = Tr(xi {dF, dG}).
double jordan_tensor(const ComplexMatrix& dF, const ComplexMatrix& dG, const DualVector& xi);

/// Gradient defined by F(xi + eps X) = F(xi) + eps Tr(dF X), central
/// differences along each basis direction.
ComplexMatrix gradient(const DualFunction& f, const DualVector& xi, const LieBasis& basis, double step = 1e-5);

double lie_poisson(const DualFunction& f, const DualFunction& g, const DualVector& xi, const LieBasis& basis,
                   double step = 1e-5);
double jordan_tensor(const DualFunction& f, const DualFunction& g, const DualVector& xi, const LieBasis& basis,
                     double step = 1e-5);

/// alpha_u(xi) = Tr(xi u)
DualFunction linear_function(const ComplexMatrix& u);

/// mu(psi) = |psi><psi|
DualVector momentum_map(const StateVector& psi);
/// |psi><psi| / <psi|psi>; throws on the zero vector.
DualVector momentum_map_projective(const StateVector& psi);

/// |mu(U psi) - U mu(psi) U^dagger|_max; throws for non-unitary U.
double check_equivariance(const ComplexMatrix& u, const StateVector& psi);

/// RK4 integration of x' = Pi(x) grad h / hbar in basis coordinates, with
/// h(xi) = Tr(xi H).
DualVector heisenberg_flow(const LieBasis& basis, const StructureConstants& sc, const HermitianOperator& h,
                           const DualVector& xi0, double t, int steps, double hbar = 1.0);

namespace calibrated {
/// Lambda(df_A, df_B) = kPullbackBracket {A, B}(mu(psi)), same for Lambda_P, e and mu~.
inline constexpr double kPullbackBracket = -2.0;
/// R(mu)(A, B) = kPullbackJordan G(df_A, df_B).
inline constexpr double kPullbackJordan = 0.5;
/// R(mu~)(A, B) = kPullbackJordan G_P(de_A, de_B) + kProjectiveJordanOffset e_A e_B.
inline constexpr double kProjectiveJordanOffset = 2.0;
}  // namespace calibrated

struct PullbackResiduals {
  double f_pullback = 0.0;           // |<mu(psi), A> - f_A|
  double e_pullback = 0.0;           // |<mu~(psi), A> - e_A|
  double bracket = 0.0;              // Lambda vs Lie-Poisson on mu
  double bracket_projective = 0.0;   // Lambda_P vs Lie-Poisson on mu~
  double jordan = 0.0;               // G vs Jordan tensor on mu
  double jordan_projective = 0.0;    // G_P vs Jordan tensor on mu~

  [[nodiscard]] double max() const;
};

PullbackResiduals pullback_checks(const HermitianOperator& a, const HermitianOperator& b, const StateVector& psi);

}  // namespace geoqm
