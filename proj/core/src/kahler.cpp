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

#include "geoqm/kahler.hpp"

#include <cmath>

namespace geoqm {

namespace {

void require_same_dim(const Covector& a, const Covector& b, const char* who) {
  if (a.c.size() != b.c.size() || a.c.size() % 2 != 0)
    throw ValidationError(std::string(who) + ": covector dimension mismatch");
}

RealChartPoint checked_point(const HermitianOperator& a, const StateVector& psi) {
  if (a.dim() != psi.dim()) throw ValidationError("operator and state dimensions differ");
  return RealChartPoint::from_state(psi);
}

}  // namespace

RealChartPoint::RealChartPoint(RealVector q, RealVector p) : q_(std::move(q)), p_(std::move(p)) {
  if (q_.size() == 0 || q_.size() != p_.size())
    throw ValidationError("RealChartPoint: q and p must be non-empty and of equal length");
}

RealChartPoint RealChartPoint::from_state(const StateVector& psi) {
  const auto& v = psi.amplitudes();
  return {v.real(), v.imag()};
}

RealChartPoint RealChartPoint::from_packed(const RealVector& x) {
  if (x.size() == 0 || x.size() % 2 != 0) throw ValidationError("RealChartPoint: packed length must be even");
  const auto n = x.size() / 2;
  return {x.head(n), x.tail(n)};
}

ComplexVector RealChartPoint::amplitudes() const {
  ComplexVector v(n());
  for (Eigen::Index j = 0; j < n(); ++j) v(j) = {q_(j), p_(j)};
  return v;
}

StateVector RealChartPoint::to_state() const { return StateVector(amplitudes()); }

RealVector RealChartPoint::packed() const {
  RealVector x(2 * n());
  x << q_, p_;
  return x;
}

ComplexVector Covector::complexified() const {
  ComplexVector w(n());
  for (Eigen::Index j = 0; j < n(); ++j) w(j) = {c(j), c(n() + j)};
  return w;
}

double eval_G(const Covector& df, const Covector& dg) {
  require_same_dim(df, dg, "eval_G");
  return df.dq().dot(dg.dq()) + df.dp().dot(dg.dp());
}

double eval_Lambda(const Covector& df, const Covector& dg) {
  require_same_dim(df, dg, "eval_Lambda");
  return df.dp().dot(dg.dq()) - df.dq().dot(dg.dp());
}

cplx hermitian_bracket(const Covector& df, const Covector& dg) {
  require_same_dim(df, dg, "hermitian_bracket");
  cplx acc = 0.0;
  for (Eigen::Index j = 0; j < df.n(); ++j) {
    const cplx wf{df.c(j), -df.c(df.n() + j)};
    const cplx wg{dg.c(j), -dg.c(dg.n() + j)};
    acc += std::conj(wf) * wg;
  }
  return acc;
}

TangentVector apply_J(const TangentVector& v) {
  if (v.size() % 2 != 0) throw ValidationError("apply_J: odd dimension");
  const auto n = v.size() / 2;
  TangentVector out(v.size());
  out.head(n) = -v.tail(n);
  out.tail(n) = v.head(n);
  return out;
}

TangentVector dilation(const RealChartPoint& x) { return x.packed(); }

TangentVector phase_generator(const RealChartPoint& x) { return apply_J(dilation(x)); }

TangentVector hamiltonian_vf(const Covector& df) {
  const auto n = df.n();
  TangentVector v(2 * n);
  v.head(n) = df.dp();
  v.tail(n) = -df.dq();
  return v;
}

TangentVector gradient_vf(const Covector& df) { return df.c; }

double contract(const Covector& df, const TangentVector& v) {
  if (df.c.size() != v.size()) throw ValidationError("contract: dimension mismatch");
  return df.c.dot(v);
}

double f_A(const HermitianOperator& a, const StateVector& psi) {
  if (a.dim() != psi.dim()) throw ValidationError("f_A: dimension mismatch");
  return f_M(a.matrix(), psi.amplitudes()).real();
}

double e_A(const HermitianOperator& a, const StateVector& psi) {
  if (a.dim() != psi.dim()) throw ValidationError("e_A: dimension mismatch");
  return e_M(a.matrix(), psi.amplitudes()).real();
}

cplx f_M(const ComplexMatrix& m, const ComplexVector& psi) {
  if (m.rows() != psi.size() || m.cols() != psi.size()) throw ValidationError("f_M: dimension mismatch");
  return psi.dot(m * psi);
}

cplx e_M(const ComplexMatrix& m, const ComplexVector& psi) {
  const double nsq = psi.squaredNorm();
  if (!(nsq > 0.0)) throw ValidationError("e_M: zero vector has no ray");
  return f_M(m, psi) / nsq;
}

Covector df_A(const HermitianOperator& a, const RealChartPoint& x) {
  if (a.dim() != x.n()) throw ValidationError("df_A: dimension mismatch");
  const ComplexVector w = 2.0 * (a.matrix() * x.amplitudes());
  Covector out{RealVector(2 * x.n())};
  out.c << w.real(), w.imag();
  return out;
}

Covector de_A(const HermitianOperator& a, const RealChartPoint& x) {
  const double nsq = x.norm_squared();
  if (!(nsq > 0.0)) throw ValidationError("de_A: zero vector has no ray");
  const ComplexVector psi = x.amplitudes();
  const double e = psi.dot(a.matrix() * psi).real() / nsq;
  Covector df = df_A(a, x);
  RealVector dI = 2.0 * x.packed();
  return Covector{(df.c - e * dI) / nsq};
}

std::array<double, 4> qubit_quadratics(const StateVector& psi) {
  if (psi.dim() != 2) throw ValidationError("qubit_quadratics: state must be two-dimensional");
  const auto x = RealChartPoint::from_state(psi);
  const double q1 = x.q()(0), q2 = x.q()(1), p1 = x.p()(0), p2 = x.p()(1);
  return {q1 * q1 + p1 * p1 + q2 * q2 + p2 * p2, 2.0 * (q1 * q2 + p1 * p2), 2.0 * (q1 * p2 - p1 * q2),
          q1 * q1 + p1 * p1 - q2 * q2 - p2 * p2};
}

cplx star_hilbert(const HermitianOperator& a, const HermitianOperator& b, const StateVector& psi) {
  const auto x = checked_point(a, psi);
  const Covector da = df_A(a, x);
  const Covector db = df_A(b, x);
  return calibrated::kStarG * eval_G(da, db) + kI * calibrated::kStarLambda * eval_Lambda(da, db);
}

cplx star_projective(const HermitianOperator& a, const HermitianOperator& b, const StateVector& psi) {
  const auto x = checked_point(a, psi);
  const ProjectiveTensors t(x);
  const Covector da = de_A(a, x);
  const Covector db = de_A(b, x);
  return e_A(a, psi) * e_A(b, psi) + calibrated::kStarG * t.G_P(da, db) +
         kI * calibrated::kStarLambda * t.Lambda_P(da, db);
}

ProjectiveTensors::ProjectiveTensors(const RealChartPoint& x)
    : x_(x), delta_(dilation(x)), gamma_(phase_generator(x)), nsq_(x.norm_squared()) {
  if (!(nsq_ > 0.0)) throw ValidationError("ProjectiveTensors: zero vector has no ray");
}

double ProjectiveTensors::G_P(const Covector& a, const Covector& b) const { return nsq_ * eval_G(a, b); }

double ProjectiveTensors::Lambda_P(const Covector& a, const Covector& b) const {
  return nsq_ * eval_Lambda(a, b);
}

cplx ProjectiveTensors::G_H(const Covector& a, const Covector& b) const {
  const double da = contract(a, delta_), db = contract(b, delta_);
  const double ga = contract(a, gamma_), gb = contract(b, gamma_);
  const cplx upstairs = nsq_ * cplx(eval_G(a, b), eval_Lambda(a, b));
  return upstairs - (da * db + ga * gb) + kI * (da * gb - ga * db);
}

double ProjectiveTensors::G_tilde(const Covector& a, const Covector& b) const {
  return G_H(a, b).real();
}

TangentVector schroedinger_vf(const HermitianOperator& h, const RealChartPoint& x, double hbar) {
  if (!(hbar > 0.0)) throw ValidationError("schroedinger_vf: hbar must be positive");
  return (calibrated::kFlowScale / hbar) * hamiltonian_vf(df_A(h, x));
}

RealChartPoint integrate_flow(const std::function<TangentVector(const RealChartPoint&)>& field,
                              const RealChartPoint& x0, double t, int steps) {
  if (steps <= 0) throw ValidationError("integrate_flow: steps must be positive");
  const double dt = t / steps;
  RealVector x = x0.packed();
  auto f = [&](const RealVector& y) { return field(RealChartPoint::from_packed(y)); };
  for (int s = 0; s < steps; ++s) {
    const RealVector k1 = f(x);
    const RealVector k2 = f(x + 0.5 * dt * k1);
    const RealVector k3 = f(x + 0.5 * dt * k2);
    const RealVector k4 = f(x + dt * k3);
    x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return RealChartPoint::from_packed(x);
}

KahlerTest is_kahlerian(const ComplexMatrix& m, double tol) {
  if (m.rows() == 0 || m.rows() != m.cols()) throw ValidationError("is_kahlerian: matrix must be square");
  const ComplexMatrix k = -2.0 * kI * m;
  const double r = max_abs(k + k.adjoint());
  return {r < tol, r};
}

Covector finite_difference_differential(const RealFunction& f, const RealVector& x, double step) {
  Covector out{RealVector(x.size())};
  RealVector y = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    y(i) = x(i) + step;
    const double fp = f(y);
    y(i) = x(i) - step;
    const double fm = f(y);
    y(i) = x(i);
    out.c(i) = (fp - fm) / (2.0 * step);
  }
  return out;
}

KahlerTest is_kahlerian(const RealFunction& f, const std::vector<RealVector>& points, double tol,
                        double step) {
  double worst = 0.0;
  for (const auto& x : points) {
    if (x.size() % 2 != 0) throw ValidationError("is_kahlerian: point dimension must be even");
    const auto d = x.size();
    const auto n = d / 2;
    RealMatrix hess(d, d);
    RealVector y = x;
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = i; j < d; ++j) {
        auto eval = [&](double si, double sj) {
          y = x;
          y(i) += si * step;
          y(j) += sj * step;
          return f(y);
        };
        const double h = (eval(1, 1) - eval(1, -1) - eval(-1, 1) + eval(-1, -1)) / (4.0 * step * step);
        hess(i, j) = h;
        hess(j, i) = h;
      }
    }
    // grad X = Omega Hess with X^q = f_p, X^p = -f_q.
    RealMatrix omega = RealMatrix::Zero(d, d);
    omega.topRightCorner(n, n) = RealMatrix::Identity(n, n);
    omega.bottomLeftCorner(n, n) = -RealMatrix::Identity(n, n);
    const RealMatrix gx = omega * hess;
    worst = std::max(worst, (gx + gx.transpose()).cwiseAbs().maxCoeff());
  }
  return {worst < tol, worst};
}

}  // namespace geoqm
