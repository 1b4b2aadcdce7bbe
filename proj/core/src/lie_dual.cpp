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

#include "geoqm/lie_dual.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "geoqm/kahler.hpp"

namespace geoqm {

LieBasis::LieBasis(std::vector<ComplexMatrix> mats) : mats_(std::move(mats)) {
  if (mats_.empty()) throw ValidationError("LieBasis: empty basis");
  const auto n = mats_.front().rows();
  if (static_cast<Eigen::Index>(mats_.size()) != n * n)
    throw ValidationError("LieBasis: expected n^2 matrices");
  n_ = static_cast<int>(n);
  for (const auto& m : mats_) {
    if (m.rows() != n || m.cols() != n) throw ValidationError("LieBasis: inconsistent matrix sizes");
    if (max_abs(m - m.adjoint()) > kHermitianTol) throw ValidationError("LieBasis: non-Hermitian element");
  }
  for (std::size_t a = 0; a < mats_.size(); ++a) {
    for (std::size_t b = a; b < mats_.size(); ++b) {
      const cplx g = (mats_[a] * mats_[b]).trace();
      const double want = (a == b) ? 2.0 : 0.0;
      if (std::abs(g - want) > 1e-12) {
        std::ostringstream os;
        os << "LieBasis: Tr(l_" << a << " l_" << b << ") = " << g.real() << ", expected " << want;
        throw ValidationError(os.str());
      }
    }
  }
}

LieBasis LieBasis::gell_mann(int n) {
  if (n < 2 || n > 4) throw ValidationError("gell_mann: n must be 2, 3 or 4");
  std::vector<ComplexMatrix> mats;
  mats.push_back(std::sqrt(2.0 / n) * ComplexMatrix::Identity(n, n));
  for (int k = 1; k < n; ++k) {
    for (int j = 0; j < k; ++j) {
      ComplexMatrix s = ComplexMatrix::Zero(n, n);
      s(j, k) = 1.0;
      s(k, j) = 1.0;
      mats.push_back(s);
      ComplexMatrix a = ComplexMatrix::Zero(n, n);
      a(j, k) = -kI;
      a(k, j) = kI;
      mats.push_back(a);
    }
    ComplexMatrix h = ComplexMatrix::Zero(n, n);
    const double scale = std::sqrt(2.0 / (k * (k + 1.0)));
    for (int j = 0; j < k; ++j) h(j, j) = scale;
    h(k, k) = -k * scale;
    mats.push_back(h);
  }
  return LieBasis(std::move(mats));
}

LieBasis LieBasis::two_qubit_product() {
  std::vector<ComplexMatrix> mats;
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 4; ++j) mats.push_back(kron(pauli(k), pauli(j)) / std::sqrt(2.0));
  return LieBasis(std::move(mats));
}

RealVector LieBasis::coefficients(const ComplexMatrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) throw ValidationError("LieBasis::coefficients: dimension mismatch");
  RealVector c(size());
  for (int mu = 0; mu < size(); ++mu) c(mu) = 0.5 * (x * mats_[static_cast<std::size_t>(mu)]).trace().real();
  return c;
}

ComplexMatrix LieBasis::compose(const RealVector& coeffs) const {
  if (coeffs.size() != size()) throw ValidationError("LieBasis::compose: wrong coefficient count");
  ComplexMatrix out = ComplexMatrix::Zero(n_, n_);
  for (int mu = 0; mu < size(); ++mu) out += coeffs(mu) * mats_[static_cast<std::size_t>(mu)];
  return out;
}

StructureConstants::StructureConstants(int dim, std::vector<double> c, std::vector<double> d)
    : dim_(dim), c_(std::move(c)), d_(std::move(d)) {
  const auto want = static_cast<std::size_t>(dim) * dim * dim;
  if (dim <= 0 || c_.size() != want || d_.size() != want)
    throw ValidationError("StructureConstants: table size mismatch");
}

std::size_t StructureConstants::index(int mu, int nu, int rho) const {
  if (mu < 0 || nu < 0 || rho < 0 || mu >= dim_ || nu >= dim_ || rho >= dim_)
    throw ValidationError("StructureConstants: index out of range");
  return (static_cast<std::size_t>(mu) * dim_ + nu) * dim_ + rho;
}

ComplexMatrix StructureConstants::product(const LieBasis& basis, int mu, int nu) const {
  ComplexMatrix out = ComplexMatrix::Zero(basis.n(), basis.n());
  for (int rho = 0; rho < dim_; ++rho) out += cplx(d(mu, nu, rho), C(mu, nu, rho)) * basis[rho];
  return out;
}

RealMatrix StructureConstants::poisson_tensor(const RealVector& x) const {
  if (x.size() != dim_) throw ValidationError("poisson_tensor: dimension mismatch");
  RealMatrix p = RealMatrix::Zero(dim_, dim_);
  for (int mu = 0; mu < dim_; ++mu)
    for (int nu = 0; nu < dim_; ++nu)
      for (int rho = 0; rho < dim_; ++rho) p(mu, nu) += C(mu, nu, rho) * x(rho);
  return p;
}

RealMatrix StructureConstants::jordan_tensor(const RealVector& x) const {
  if (x.size() != dim_) throw ValidationError("jordan_tensor: dimension mismatch");
  RealMatrix r = RealMatrix::Zero(dim_, dim_);
  for (int mu = 0; mu < dim_; ++mu)
    for (int nu = 0; nu < dim_; ++nu)
      for (int rho = 0; rho < dim_; ++rho) r(mu, nu) += d(mu, nu, rho) * x(rho);
  return r;
}

StructureConstants structure_constants(const LieBasis& basis) {
  const int m = basis.size();
  const auto total = static_cast<std::size_t>(m) * m * m;
  std::vector<double> c(total), d(total);
  std::size_t at = 0;
  for (int mu = 0; mu < m; ++mu) {
    for (int nu = 0; nu < m; ++nu) {
      const ComplexMatrix comm = commutator(basis[mu], basis[nu]);
      const ComplexMatrix anti = anticommutator(basis[mu], basis[nu]);
      for (int rho = 0; rho < m; ++rho, ++at) {
        c[at] = ((comm * basis[rho]).trace() / (4.0 * kI)).real();
        d[at] = ((anti * basis[rho]).trace() / 4.0).real();
      }
    }
  }
  return {m, std::move(c), std::move(d)};
}

DualVector::DualVector(ComplexMatrix xi) : xi_(std::move(xi)) {
  if (xi_.rows() == 0 || xi_.rows() != xi_.cols()) throw ValidationError("DualVector: matrix must be square");
  if (max_abs(xi_ - xi_.adjoint()) > 1e-10) throw ValidationError("DualVector: matrix must be Hermitian");
}

DualVector DualVector::from_coefficients(const LieBasis& basis, const RealVector& coeffs) {
  return DualVector(basis.compose(coeffs));
}

double lie_poisson(const ComplexMatrix& dF, const ComplexMatrix& dG, const DualVector& xi) {
  return (xi.matrix() * (-kI) * commutator(dF, dG)).trace().real();
}

double jordan_tensor(const ComplexMatrix& dF, const ComplexMatrix& dG, const DualVector& xi) {
  return (xi.matrix() * anticommutator(dF, dG)).trace().real();
}

ComplexMatrix gradient(const DualFunction& f, const DualVector& xi, const LieBasis& basis, double step) {
  ComplexMatrix grad = ComplexMatrix::Zero(basis.n(), basis.n());
  for (int mu = 0; mu < basis.size(); ++mu) {
    // Moving x_mu by h moves xi by h l_mu.
    const double fp = f(DualVector(xi.matrix() + step * basis[mu]));
    const double fm = f(DualVector(xi.matrix() - step * basis[mu]));
    grad += 0.5 * ((fp - fm) / (2.0 * step)) * basis[mu];
  }
  return grad;
}

double lie_poisson(const DualFunction& f, const DualFunction& g, const DualVector& xi, const LieBasis& basis,
                   double step) {
  return lie_poisson(gradient(f, xi, basis, step), gradient(g, xi, basis, step), xi);
}

double jordan_tensor(const DualFunction& f, const DualFunction& g, const DualVector& xi, const LieBasis& basis,
                     double step) {
  return jordan_tensor(gradient(f, xi, basis, step), gradient(g, xi, basis, step), xi);
}

DualFunction linear_function(const ComplexMatrix& u) {
  return [u](const DualVector& xi) { return xi.pair(u).real(); };
}

DualVector momentum_map(const StateVector& psi) {
  ComplexMatrix rho = outer(psi.amplitudes());
  return DualVector(0.5 * (rho + rho.adjoint()));
}

DualVector momentum_map_projective(const StateVector& psi) {
  const double nsq = psi.amplitudes().squaredNorm();
  if (!(nsq > 0.0)) throw ValidationError("momentum_map_projective: zero vector has no ray");
  ComplexMatrix rho = outer(psi.amplitudes()) / nsq;
  return DualVector(0.5 * (rho + rho.adjoint()));
}

double check_equivariance(const ComplexMatrix& u, const StateVector& psi) {
  if (u.rows() != psi.dim() || !is_unitary(u)) throw ValidationError("check_equivariance: U must be unitary");
  const DualVector lhs = momentum_map(StateVector(u * psi.amplitudes()));
  const ComplexMatrix rhs = u * momentum_map(psi).matrix() * u.adjoint();
  return max_abs(lhs.matrix() - rhs);
}

DualVector heisenberg_flow(const LieBasis& basis, const StructureConstants& sc, const HermitianOperator& h,
                           const DualVector& xi0, double t, int steps, double hbar) {
  if (steps <= 0) throw ValidationError("heisenberg_flow: steps must be positive");
  if (!(hbar > 0.0)) throw ValidationError("heisenberg_flow: hbar must be positive");
  if (h.dim() != basis.n()) throw ValidationError("heisenberg_flow: dimension mismatch");
  RealVector dh(basis.size());
  for (int nu = 0; nu < basis.size(); ++nu) dh(nu) = (basis[nu] * h.matrix()).trace().real();
  auto rhs = [&](const RealVector& x) -> RealVector { return sc.poisson_tensor(x) * dh / hbar; };
  RealVector x = xi0.coefficients(basis);
  const double dt = t / steps;
  for (int s = 0; s < steps; ++s) {
    const RealVector k1 = rhs(x);
    const RealVector k2 = rhs(x + 0.5 * dt * k1);
    const RealVector k3 = rhs(x + 0.5 * dt * k2);
    const RealVector k4 = rhs(x + dt * k3);
    x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  ComplexMatrix m = basis.compose(x);
  return DualVector(0.5 * (m + m.adjoint()));
}

double PullbackResiduals::max() const {
  return std::max({f_pullback, e_pullback, bracket, bracket_projective, jordan, jordan_projective});
}

PullbackResiduals pullback_checks(const HermitianOperator& a, const HermitianOperator& b, const StateVector& psi) {
  if (a.dim() != psi.dim() || b.dim() != psi.dim()) throw ValidationError("pullback_checks: dimension mismatch");
  const auto x = RealChartPoint::from_state(psi);
  const DualVector mu = momentum_map(psi);
  const DualVector mu_t = momentum_map_projective(psi);
  const ProjectiveTensors proj(x);
  const Covector dfa = df_A(a, x), dfb = df_A(b, x);
  const Covector dea = de_A(a, x), deb = de_A(b, x);
  const double ea = e_A(a, psi), eb = e_A(b, psi);

  PullbackResiduals r;
  r.f_pullback = std::abs(mu.pair(a.matrix()).real() - f_A(a, psi));
  r.e_pullback = std::abs(mu_t.pair(a.matrix()).real() - ea);
  r.bracket = std::abs(eval_Lambda(dfa, dfb) -
                       calibrated::kPullbackBracket * lie_poisson(a.matrix(), b.matrix(), mu));
  r.bracket_projective = std::abs(proj.Lambda_P(dea, deb) -
                                  calibrated::kPullbackBracket * lie_poisson(a.matrix(), b.matrix(), mu_t));
  r.jordan = std::abs(jordan_tensor(a.matrix(), b.matrix(), mu) - calibrated::kPullbackJordan * eval_G(dfa, dfb));
  r.jordan_projective =
      std::abs(jordan_tensor(a.matrix(), b.matrix(), mu_t) -
               (calibrated::kPullbackJordan * proj.G_P(dea, deb) + calibrated::kProjectiveJordanOffset * ea * eb));
  return r;
}

}  // namespace geoqm
