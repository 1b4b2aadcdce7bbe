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

#include "geoqm/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "geoqm/discrete_weyl.hpp"
#include "geoqm/fock.hpp"
#include "geoqm/kahler.hpp"
#include "geoqm/lie_dual.hpp"
#include "geoqm/moyal.hpp"
#include "geoqm/phase_grid.hpp"
#include "geoqm/polar.hpp"
#include "geoqm/random.hpp"
#include "geoqm/u4chart.hpp"
#include "geoqm/witness.hpp"

namespace geoqm {

namespace {

struct Check {
  const char* name;
  const char* module;
  double tolerance;
  std::function<double(Sampler&)> residual;
};

double kahler_compatibility(Sampler& s) {
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Eigen::Index n = 2 + t % 3;
    const TangentVector v = RealVector::NullaryExpr(2 * n, [&] { return s.normal(); });
    worst = std::max(worst, (apply_J(apply_J(v)) + v).cwiseAbs().maxCoeff());
    const Covector a{RealVector::NullaryExpr(2 * n, [&] { return s.normal(); })};
    const Covector b{RealVector::NullaryExpr(2 * n, [&] { return s.normal(); })};
    const cplx h = hermitian_bracket(a, b);
    worst = std::max(worst, std::abs(h - cplx(eval_G(a, b), eval_Lambda(a, b))));
  }
  return worst;
}

double star_products(Sampler& s) {
  double worst = 0.0;
  for (int t = 0; t < 30; ++t) {
    const Eigen::Index n = 2 + t % 3;
    const auto a = s.hermitian(n), b = s.hermitian(n);
    const StateVector psi(s.gaussian_vector(n));
    const ComplexMatrix ab = a.matrix() * b.matrix();
    worst = std::max(worst, std::abs(star_hilbert(a, b, psi) - f_M(ab, psi.amplitudes())));
    worst = std::max(worst, std::abs(star_projective(a, b, psi) - e_M(ab, psi.amplitudes())));
  }
  return worst;
}

double variance_identity(Sampler& s) {
  double worst = 0.0;
  for (int t = 0; t < 30; ++t) {
    const Eigen::Index n = 2 + t % 3;
    const auto a = s.hermitian(n);
    const StateVector psi(s.gaussian_vector(n));
    const RealChartPoint x = RealChartPoint::from_state(psi);
    const ProjectiveTensors pt(x);
    const Covector d = de_A(a, x);
    const double ea = e_A(a, psi);
    const double rhs =
        calibrated::kVarianceKappa * (e_M(a.matrix() * a.matrix(), psi.amplitudes()).real() - ea * ea);
    worst = std::max(worst, std::abs(pt.G_tilde(d, d) - rhs));
  }
  return worst;
}

double structure_reconstruction(Sampler&) {
  double worst = 0.0;
  for (int n = 2; n <= 4; ++n) {
    const LieBasis basis = LieBasis::gell_mann(n);
    const StructureConstants sc = structure_constants(basis);
    for (int mu = 0; mu < basis.size(); ++mu)
      for (int nu = 0; nu < basis.size(); ++nu)
        worst = std::max(worst, max_abs(sc.product(basis, mu, nu) - basis[mu] * basis[nu]));
  }
  return worst;
}

double jacobi_identity(Sampler&) {
  const LieBasis basis = LieBasis::gell_mann(3);
  const StructureConstants sc = structure_constants(basis);
  const int d = basis.size();
  double worst = 0.0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) {
          double acc = 0.0;
          for (int r = 0; r < d; ++r)
            acc += sc.C(a, b, r) * sc.C(r, c, e) + sc.C(b, c, r) * sc.C(r, a, e) + sc.C(c, a, r) * sc.C(r, b, e);
          worst = std::max(worst, std::abs(acc));
        }
  return worst;
}

double momentum_map(Sampler& s) {
  double worst = 0.0;
  for (int t = 0; t < 30; ++t) {
    const Eigen::Index n = 2 + t % 3;
    const auto a = s.hermitian(n), b = s.hermitian(n);
    const StateVector psi(s.gaussian_vector(n));
    worst = std::max(worst, check_equivariance(s.unitary(n), psi));
    worst = std::max(worst, pullback_checks(a, b, psi).max());
  }
  return worst;
}

double chart_consistency(Sampler& s) {
  const U4ChartTensors tensors;
  double worst = 0.0;
  for (int t = 0; t < 3; ++t) {
    const U4ChartPoint x = to_chart(s.hermitian(4));
    const RealMatrix p = tensors.poisson(x), r = tensors.jordan(x);
    for (int i = 0; i < kChartDim; i += 5)
      for (int j = 0; j < kChartDim; j += 3) {
        worst = std::max(worst, std::abs(p(i, j) - matrix_side_bracket(i, j, x, false)));
        worst = std::max(worst, std::abs(r(i, j) - matrix_side_bracket(i, j, x, true)));
      }
  }
  return worst;
}

double witness_concurrence(Sampler& s) {
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const double a = s.uniform(0.05, 0.6), b = s.uniform(0.05, 0.95 - a);
    const double c = s.uniform(0.0, 1.0) * std::min(1.0, 2.0 * std::sqrt(a * b));
    worst = std::max(worst, std::abs(concurrence(rho_t({a, b, c, s.uniform(0.0, 6.0)})) - c));
  }
  return worst;
}

double witness_bracket(Sampler& s) {
  double worst = 0.0;
  for (int t = 0; t < 3; ++t) {
    const double a = s.uniform(0.15, 0.4), b = s.uniform(0.15, 0.4);
    const double c = s.uniform(0.2, 0.8) * 2.0 * std::sqrt(a * b);
    worst = std::max(worst, std::abs(poisson_bracket_SC({a, b, c, s.uniform(0.0, 6.0)})));
  }
  return worst;
}

double weyl_composition(Sampler&) {
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    const DiscreteWeylSystem w(n);
    for (int x1 = 0; x1 < n; ++x1)
      for (int a1 = 0; a1 < n; ++a1)
        for (int x2 = 0; x2 < n; ++x2)
          for (int a2 = 0; a2 < n; ++a2)
            worst = std::max(worst, max_abs(w.weyl(x1, a1) * w.weyl(x2, a2) -
                                            w.cocycle(x1, a1, x2, a2) * w.weyl(x1 + x2, a1 + a2)));
  }
  return worst;
}

double weyl_round_trip(Sampler& s) {
  const DiscreteWeylSystem w(8);
  ComplexMatrix a(8, 8);
  for (Eigen::Index j = 0; j < 8; ++j)
    for (Eigen::Index i = 0; i < 8; ++i) a(i, j) = s.complex_normal();
  return max_abs(w.quantize(w.symbol(a)) - a);
}

double wigner_normalization_check(Sampler&) {
  const PhaseSpaceGrid g(GridAxis{-8.0, 8.0, 256}, GridAxis{-8.0, 8.0, 256}, 1.0);
  const WaveFunction1D psi = WaveFunction1D::normalized(g.q(), oscillator_eigenfunction(0, g.q()));
  const WignerResult w = wigner_function(psi, g);
  double worst = std::abs(wigner_normalization(w) - 1.0);
  const RealVector qm = q_marginal(w);
  worst = std::max(worst, (qm - psi.samples().cwiseAbs2()).cwiseAbs().maxCoeff());
  return worst;
}

double moyal_canonical(Sampler&) {
  const double hbar = 0.7;
  const PhasePolynomial qp = moyal_star(PhasePolynomial::q(), PhasePolynomial::p(), hbar);
  return qp.distance(PhasePolynomial::monomial(1, 1) + PhasePolynomial::constant(cplx(0.0, 0.5 * hbar)));
}

double moyal_stationary(Sampler&) {
  const PhaseSpaceGrid g(GridAxis{-8.0, 8.0, 256}, GridAxis{-8.0, 8.0, 256}, 1.0);
  return stationary_moyal_check(oscillator_wigner(0, g), 0.5);
}

double fock_coherent(Sampler&) {
  const FockSpace fock(40);
  const auto z = coherent_state(cplx(0.8, -0.6), fock);
  const ComplexVector& v = z.state.amplitudes();
  double worst = (fock.annihilation() * v - cplx(0.8, -0.6) * v).cwiseAbs().maxCoeff();
  worst = std::max(worst, std::abs(berezin_symbol(fock.number(), cplx(0.8, -0.6), fock) - 1.0));
  return worst;
}

double polar_continuity(Sampler&) {
  const GridAxis axis{-10.0, 10.0, 256};
  const auto sys = Schrodinger1D::harmonic(axis);
  const auto psi0 = WaveFunction1D::normalized(axis, gaussian_packet(axis, 1.0, 0.5, 0.8));
  const double dt = 1e-3;
  return polar_diagnostics(sys.evolve(psi0, dt, 20), dt).max_continuity_residual;
}

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = {
      {"kahler_compatibility", "kahler", 1e-12, kahler_compatibility},
      {"star_products", "kahler", 1e-10, star_products},
      {"variance_identity", "kahler", 1e-9, variance_identity},
      {"structure_reconstruction", "lie-dual", 1e-12, structure_reconstruction},
      {"jacobi_identity", "lie-dual", 1e-12, jacobi_identity},
      {"momentum_map", "lie-dual", 1e-9, momentum_map},
      {"chart_consistency", "u4chart", 1e-7, chart_consistency},
      {"witness_concurrence", "witness", 1e-12, witness_concurrence},
      {"witness_bracket", "witness", 1e-7, witness_bracket},
      {"weyl_composition", "phasespace", 1e-12, weyl_composition},
      {"weyl_round_trip", "phasespace", 1e-10, weyl_round_trip},
      {"wigner_normalization", "phasespace", 1e-6, wigner_normalization_check},
      {"moyal_canonical", "phasespace", 1e-12, moyal_canonical},
      {"moyal_stationary", "phasespace", 1e-5, moyal_stationary},
      {"fock_coherent", "phasespace", 1e-6, fock_coherent},
      {"polar_continuity", "phasespace", 1e-4, polar_continuity},
  };
  return checks;
}

}  // namespace

std::vector<std::string> invariant_names() {
  std::vector<std::string> out;
  for (const auto& c : registry()) out.emplace_back(c.name);
  return out;
}

std::vector<InvariantResult> run_invariants(std::uint64_t seed, const std::vector<std::string>& modules) {
  std::vector<InvariantResult> out;
  const auto& checks = registry();
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const Check& c = checks[i];
    if (!modules.empty() && std::find(modules.begin(), modules.end(), c.module) == modules.end()) continue;
    InvariantResult r{c.name, c.module, 0.0, c.tolerance, false, {}};
    Sampler sampler(seed * 1000003ULL + i);
    try {
      r.residual = c.residual(sampler);
      r.passed = std::isfinite(r.residual) && r.residual <= c.tolerance;
    } catch (const std::exception& e) {
      r.residual = std::nan("");
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace geoqm
