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

#include <array>
#include <functional>
#include <vector>

#include "geoqm/linops.hpp"

namespace geoqm {

/// Real coordinates of psi in the computational basis, z^j = q^j + i p_j.
class RealChartPoint {
 public:
  RealChartPoint(RealVector q, RealVector p);
  static RealChartPoint from_state(const StateVector& psi);
  /// Packed (q^1..q^n, p_1..p_n).
  static RealChartPoint from_packed(const RealVector& x);

  [[nodiscard]] StateVector to_state() const;
  [[nodiscard]] ComplexVector amplitudes() const;
  [[nodiscard]] RealVector packed() const;
  [[nodiscard]] const RealVector& q() const noexcept { return q_; }
  [[nodiscard]] const RealVector& p() const noexcept { return p_; }
  [[nodiscard]] Eigen::Index n() const noexcept { return q_.size(); }
  /// <psi|psi>
  [[nodiscard]] double norm_squared() const { return q_.squaredNorm() + p_.squaredNorm(); }

 private:
  RealVector q_;
  RealVector p_;
};

/// A 1-form at a point, components ordered (dq^1..dq^n, dp_1..dp_n).
struct Covector {
  RealVector c;

  [[nodiscard]] Eigen::Index n() const noexcept { return c.size() / 2; }
  [[nodiscard]] auto dq() const { return c.head(n()); }
  [[nodiscard]] auto dp() const { return c.tail(n()); }
  /// Complex packing a + i b with a the dq part and b the dp part.
  [[nodiscard]] ComplexVector complexified() const;
};

/// Tangent vectors use the same packing, (d/dq^1.., d/dp_1..).
using TangentVector = RealVector;

double eval_G(const Covector& df, const Covector& dg);
double eval_Lambda(const Covector& df, const Covector& dg);
/// <df, dg> = sum conj(w_f) w_g with w = a - i b, computed without G or Lambda.
cplx hermitian_bracket(const Covector& df, const Covector& dg);

/// J(d/dq) = d/dp, J(d/dp) = -d/dq.
TangentVector apply_J(const TangentVector& v);
TangentVector dilation(const RealChartPoint& x);
/// Gamma = J(Delta), generator of psi -> e^{i theta} psi.
TangentVector phase_generator(const RealChartPoint& x);
/// Lambda(df, .)
TangentVector hamiltonian_vf(const Covector& df);
/// G(df, .)
TangentVector gradient_vf(const Covector& df);
/// Pairing of a covector with a tangent vector.
double contract(const Covector& df, const TangentVector& v);

double f_A(const HermitianOperator& a, const StateVector& psi);
/// Throws on the zero vector.
double e_A(const HermitianOperator& a, const StateVector& psi);
/// <psi|M|psi> for any square M (complex in general).
cplx f_M(const ComplexMatrix& m, const ComplexVector& psi);
cplx e_M(const ComplexMatrix& m, const ComplexVector& psi);

Covector df_A(const HermitianOperator& a, const RealChartPoint& x);
Covector de_A(const HermitianOperator& a, const RealChartPoint& x);

/// (f_sigma0, f_sigma1, f_sigma2, f_sigma3) as polynomials in (q, p).
std::array<double, 4> qubit_quadratics(const StateVector& psi);

/// Scalar prefactors fixed by calibration against the coordinate oracle.
namespace calibrated {
/// f_A * f_B = kStarG G(df_A, df_B) + i kStarLambda Lambda(df_A, df_B).
inline constexpr double kStarG = 0.25;
inline constexpr double kStarLambda = -0.25;
/// Gtilde(e_A, e_A) = kappa (e_{A^2} - e_A^2).
inline constexpr double kVarianceKappa = 4.0;
/// Lambda(df_A, df_B) = kBracket f_{-i[A,B]}.
inline constexpr double kBracket = -2.0;
/// d psi/dt = (kFlowScale / hbar) X_{f_H}.
inline constexpr double kFlowScale = 0.5;
}  // namespace calibrated

cplx star_hilbert(const HermitianOperator& a, const HermitianOperator& b, const StateVector& psi);
cplx star_projective(const HermitianOperator& a, const HermitianOperator& b, const StateVector& psi);

/// Conformally rescaled tensors on the punctured space; all are projectable.
class ProjectiveTensors {
 public:
  explicit ProjectiveTensors(const RealChartPoint& x);

  [[nodiscard]] double G_P(const Covector& a, const Covector& b) const;
  [[nodiscard]] double Lambda_P(const Covector& a, const Covector& b) const;
  /// N (G + i Lambda) - (Delta (x) Delta + Gamma (x) Gamma) + i (Delta (x) Gamma - Gamma (x) Delta)
  [[nodiscard]] cplx G_H(const Covector& a, const Covector& b) const;
  /// Re G_H, the metric part that descends to the ray space. Scale invariant
  /// on differentials of degree-zero functions such as e_A.
  [[nodiscard]] double G_tilde(const Covector& a, const Covector& b) const;
  [[nodiscard]] const RealChartPoint& point() const noexcept { return x_; }

 private:
  RealChartPoint x_;
  TangentVector delta_;
  TangentVector gamma_;
  double nsq_;
};

/// Velocity of the Schroedinger flow at x, (kFlowScale/hbar) X_{f_H}.
TangentVector schroedinger_vf(const HermitianOperator& h, const RealChartPoint& x, double hbar = 1.0);

/// Fixed-step RK4 for a vector field on the real chart.
RealChartPoint integrate_flow(const std::function<TangentVector(const RealChartPoint&)>& field,
                              const RealChartPoint& x0, double t, int steps);

struct KahlerTest {
  bool kahlerian = false;
  double residual = 0.0;
};

/// Algebraic route: the flow generator psi' = -2 i M psi preserves the
/// metric iff it is anti-Hermitian.
KahlerTest is_kahlerian(const ComplexMatrix& m, double tol = 1e-6);

using RealFunction = std::function<double(const RealVector&)>;

/// Finite-difference route: Killing residual |grad X + grad X^T| of the
/// Hamiltonian field of f, maximised over the sample points.
KahlerTest is_kahlerian(const RealFunction& f, const std::vector<RealVector>& points,
                        double tol = 1e-6, double step = 1e-4);

/// Central-difference differential of f at x.
Covector finite_difference_differential(const RealFunction& f, const RealVector& x, double step = 1e-5);

}  // namespace geoqm
