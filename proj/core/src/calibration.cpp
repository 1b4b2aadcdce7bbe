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

#include "geoqm/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "geoqm/kahler.hpp"
#include "geoqm/lie_dual.hpp"
#include "geoqm/random.hpp"

namespace geoqm {

namespace {

struct Sample {
  HermitianOperator a;
  HermitianOperator b;
  StateVector psi;
};

// Fits lhs ~ c rhs and reports the residual of the hard-coded value.
CalibratedConstant fit_one(const std::string& name, double hard, const std::vector<double>& lhs,
                           const std::vector<double>& rhs) {
  double num = 0.0, den = 0.0, worst = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    num += lhs[i] * rhs[i];
    den += rhs[i] * rhs[i];
    worst = std::max(worst, std::abs(lhs[i] - hard * rhs[i]));
  }
  return {name, den > 0.0 ? num / den : 0.0, hard, worst};
}

}  // namespace

std::vector<CalibratedConstant> run_calibration(std::uint64_t seed, int samples) {
  Sampler rng(seed);
  std::vector<Sample> draws;
  draws.reserve(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) {
    const int n = 2 + s % 3;
    // Raw-normalized states so the projective constants see rescaling.
    const double scale = rng.uniform(0.5, 2.0);
    draws.push_back({rng.hermitian(n), rng.hermitian(n),
                     StateVector(scale * rng.unit_state(n).amplitudes())});
  }

  std::vector<double> re_ab, g, im_ab, lam, var, gt, lam_ab, comm, vel, xh, pb_l, pb_p, jr, gg;
  std::vector<double> jp_lhs, jp_gp, jp_ee;
  for (const auto& [a, b, psi] : draws) {
    const auto x = RealChartPoint::from_state(psi);
    const Covector da = df_A(a, x), db = df_A(b, x);
    const cplx fab = f_M(a.matrix() * b.matrix(), psi.amplitudes());
    re_ab.push_back(fab.real());
    g.push_back(eval_G(da, db));
    im_ab.push_back(fab.imag());
    lam.push_back(eval_Lambda(da, db));

    const ProjectiveTensors proj(x);
    const Covector dea = de_A(a, x), deb = de_A(b, x);
    const double ea = e_A(a, psi), eb = e_A(b, psi);
    var.push_back(e_M(a.matrix() * a.matrix(), psi.amplitudes()).real() - ea * ea);
    gt.push_back(proj.G_tilde(dea, dea));

    lam_ab.push_back(eval_Lambda(da, db));
    comm.push_back(f_M(-kI * commutator(a.matrix(), b.matrix()), psi.amplitudes()).real());

    // Schroedinger velocity -i H psi against X_{f_H}, componentwise.
    const ComplexVector v = -kI * (a.matrix() * psi.amplitudes());
    const TangentVector xf = hamiltonian_vf(da);
    for (Eigen::Index j = 0; j < x.n(); ++j) {
      vel.push_back(v(j).real());
      xh.push_back(xf(j));
      vel.push_back(v(j).imag());
      xh.push_back(xf(x.n() + j));
    }

    const DualVector mu = momentum_map(psi);
    const DualVector mu_t = momentum_map_projective(psi);
    pb_l.push_back(eval_Lambda(da, db));
    pb_p.push_back(lie_poisson(a.matrix(), b.matrix(), mu));
    jr.push_back(jordan_tensor(a.matrix(), b.matrix(), mu));
    gg.push_back(eval_G(da, db));

    jp_lhs.push_back(jordan_tensor(a.matrix(), b.matrix(), mu_t));
    jp_gp.push_back(proj.G_P(dea, deb));
    jp_ee.push_back(ea * eb);
  }

  std::vector<CalibratedConstant> out;
  out.push_back(fit_one("star_G", calibrated::kStarG, re_ab, g));
  out.push_back(fit_one("star_Lambda", calibrated::kStarLambda, im_ab, lam));
  out.push_back(fit_one("variance_kappa", calibrated::kVarianceKappa, gt, var));
  out.push_back(fit_one("lambda_bracket", calibrated::kBracket, lam_ab, comm));
  out.push_back(fit_one("flow_scale", calibrated::kFlowScale, vel, xh));
  out.push_back(fit_one("pullback_bracket", calibrated::kPullbackBracket, pb_l, pb_p));
  out.push_back(fit_one("pullback_jordan", calibrated::kPullbackJordan, jr, gg));

  // Two-parameter fit R(mu~) = alpha G_P + beta e_A e_B.
  Eigen::MatrixX2d design(static_cast<Eigen::Index>(jp_lhs.size()), 2);
  RealVector rhs(static_cast<Eigen::Index>(jp_lhs.size()));
  double worst = 0.0;
  for (std::size_t i = 0; i < jp_lhs.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    design(r, 0) = jp_gp[i];
    design(r, 1) = jp_ee[i];
    rhs(r) = jp_lhs[i];
    worst = std::max(worst, std::abs(jp_lhs[i] - calibrated::kPullbackJordan * jp_gp[i] -
                                     calibrated::kProjectiveJordanOffset * jp_ee[i]));
  }
  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(rhs);
  out.push_back({"projective_jordan_G_P", coef(0), calibrated::kPullbackJordan, worst});
  out.push_back({"projective_jordan_offset", coef(1), calibrated::kProjectiveJordanOffset, worst});
  return out;
}

}  // namespace geoqm
