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

#include <doctest.h>

#include "geoqm/calibration.hpp"
#include "geoqm/kahler.hpp"
#include "geoqm/random.hpp"
#include "oracles.hpp"

using namespace geoqm;

namespace {

// Random raw (non-normalised) state of dimension n, norm in [0.5, 2].
StateVector raw_state(Sampler& s, Eigen::Index n) {
  return StateVector(s.uniform(0.5, 2.0) * s.unit_state(n).amplitudes());
}

Covector random_covector(Sampler& s, Eigen::Index n) {
  RealVector c(2 * n);
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = s.normal();
  return {c};
}

}  // namespace

TEST_CASE("differentials of f_A and e_A match finite differences") {
  Sampler s(21);
  for (int t = 0; t < 30; ++t) {
    const Eigen::Index n = 2 + t % 3;
    const auto a = s.hermitian(n);
    const auto psi = raw_state(s, n);
    const RealChartPoint x = RealChartPoint::from_state(psi);
    auto f = [&](const RealVector& y) { return oracle::expectation(a.matrix(), oracle::unpack(y)).real(); };
    auto e = [&](const RealVector& y) {
      const auto v = oracle::unpack(y);
      return oracle::expectation(a.matrix(), v).real() / v.squaredNorm();
    };
    CHECK((df_A(a, x).c - oracle::fd_gradient(f, oracle::pack(psi.amplitudes()))).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((de_A(a, x).c - oracle::fd_gradient(e, oracle::pack(psi.amplitudes()))).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("G and Lambda are the real and imaginary parts of the Hermitian bracket") {
  Sampler s(22);
  for (int t = 0; t < 50; ++t) {
    const Eigen::Index n = 1 + t % 4;
    const auto a = random_covector(s, n), b = random_covector(s, n);
    const cplx h = hermitian_bracket(a, b);
    CHECK(std::abs(h.real() - eval_G(a, b)) < 1e-13);
    CHECK(std::abs(h.imag() - eval_Lambda(a, b)) < 1e-13);
    CHECK(std::abs(eval_G(a, b) - eval_G(b, a)) < 1e-13);
    CHECK(std::abs(eval_Lambda(a, b) + eval_Lambda(b, a)) < 1e-13);
  }
}

TEST_CASE("J is a complex structure compatible with G and Lambda") {
  Sampler s(23);
  for (int t = 0; t < 30; ++t) {
    const Eigen::Index n = 2 + t % 3;
    const auto a = random_covector(s, n);
    const TangentVector v = a.c;
    CHECK((apply_J(apply_J(v)) + v).cwiseAbs().maxCoeff() == 0.0);
    // X_f = -J grad f with X^q = f_p, X^p = -f_q.
    CHECK((hamiltonian_vf(a) + apply_J(gradient_vf(a))).cwiseAbs().maxCoeff() < 1e-14);
    const auto b = random_covector(s, n);
    CHECK(std::abs(contract(b, hamiltonian_vf(a)) - eval_Lambda(a, b)) < 1e-13);
  }
}

TEST_CASE("dilation and phase generator") {
  Sampler s(24);
  const auto psi = raw_state(s, 3);
  const auto x = RealChartPoint::from_state(psi);
  CHECK((dilation(x) - x.packed()).norm() == 0.0);
  CHECK((phase_generator(x) - apply_J(dilation(x))).norm() == 0.0);
  // d/dtheta e^{i theta} psi at theta = 0.
  const ComplexVector dpsi = kI * psi.amplitudes();
  CHECK((phase_generator(x) - oracle::pack(dpsi)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("star products reproduce operator products") {
  Sampler s(25);
  for (int t = 0; t < 100; ++t) {
    const Eigen::Index n = 2 + t % 3;
    const auto a = s.hermitian(n), b = s.hermitian(n);
    const auto psi = raw_state(s, n);
    const ComplexMatrix ab = a.matrix() * b.matrix();
    const cplx fab = oracle::expectation(ab, psi.amplitudes());
    CHECK(std::abs(star_hilbert(a, b, psi) - fab) < 1e-10);
    CHECK(std::abs(star_projective(a, b, psi) - fab / psi.amplitudes().squaredNorm()) < 1e-10);
  }
}

TEST_CASE("Lambda of two differentials is the expectation of the commutator") {
  Sampler s(26);
  for (int t = 0; t < 50; ++t) {
    const Eigen::Index n = 2 + t % 3;
    const auto a = s.hermitian(n), b = s.hermitian(n);
    const auto psi = raw_state(s, n);
    const auto x = RealChartPoint::from_state(psi);
    const ComplexMatrix c = -kI * commutator(a.matrix(), b.matrix());
    const double rhs = calibrated::kBracket * oracle::expectation(c, psi.amplitudes()).real();
    CHECK(std::abs(eval_Lambda(df_A(a, x), df_A(b, x)) - rhs) < 1e-10);
  }
}

TEST_CASE("qubit quadratic functions and Jordan closure") {
  Sampler s(27);
  for (int t = 0; t < 50; ++t) {
    const auto psi = raw_state(s, 2);
    const auto f = qubit_quadratics(psi);
    for (int k = 0; k < 4; ++k)
      CHECK(std::abs(f[static_cast<std::size_t>(k)] -
                     oracle::expectation(oracle::pauli(k), psi.amplitudes()).real()) < 1e-13);
    // G(df_j, df_k) = (1/kStarG) f_{(sigma_j sigma_k + sigma_k sigma_j)/2}, which lies in the span.
    const auto x = RealChartPoint::from_state(psi);
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        const double g = eval_G(df_A(HermitianOperator(pauli(j)), x), df_A(HermitianOperator(pauli(k)), x));
        double expect = 0.0;
        if (j == 0 || k == 0)
          expect = f[static_cast<std::size_t>(j + k)];
        else if (j == k)
          expect = f[0];
        CHECK(std::abs(g - expect / calibrated::kStarG) < 1e-12);
      }
  }
}

TEST_CASE("projective tensors annihilate the fibre directions") {
  Sampler s(28);
  for (int t = 0; t < 30; ++t) {
    const Eigen::Index n = 2 + t % 3;
    const auto psi = raw_state(s, n);
    const auto x = RealChartPoint::from_state(psi);
    const ProjectiveTensors pt(x);
    const Covector di = df_A(HermitianOperator(ComplexMatrix::Identity(n, n)), x);
    const auto b = random_covector(s, n);
    CHECK(std::abs(pt.G_H(di, b)) < 1e-12);
    CHECK(std::abs(pt.G_H(b, di)) < 1e-12);
    CHECK(std::abs(pt.G_tilde(di, b)) < 1e-12);
    CHECK(std::abs(pt.G_P(b, b) - x.norm_squared() * eval_G(b, b)) < 1e-12);
  }
}

TEST_CASE("G tilde on expectation values is ray invariant") {
  Sampler s(29);
  for (int t = 0; t < 30; ++t) {
    const Eigen::Index n = 2 + t % 3;
    const auto a = s.hermitian(n), b = s.hermitian(n);
    const auto psi = raw_state(s, n);
    const cplx lambda = std::polar(s.uniform(0.3, 3.0), s.uniform(0.0, 6.0));
    const StateVector phi(lambda * psi.amplitudes());
    const auto x = RealChartPoint::from_state(psi), y = RealChartPoint::from_state(phi);
    const double gx = ProjectiveTensors(x).G_tilde(de_A(a, x), de_A(b, x));
    const double gy = ProjectiveTensors(y).G_tilde(de_A(a, y), de_A(b, y));
    CHECK(std::abs(gx - gy) < 1e-10);
  }
}

TEST_CASE("variance identity with a single kappa") {
  Sampler s(30);
  for (int t = 0; t < 1000; ++t) {
    const Eigen::Index n = 2 + t % 3;
    const auto a = s.hermitian(n);
    const auto psi = raw_state(s, n);
    const auto x = RealChartPoint::from_state(psi);
    const double n2 = psi.amplitudes().squaredNorm();
    const double ea = oracle::expectation(a.matrix(), psi.amplitudes()).real() / n2;
    const double ea2 = oracle::expectation(a.matrix() * a.matrix(), psi.amplitudes()).real() / n2;
    const auto d = de_A(a, x);
    CHECK(std::abs(ProjectiveTensors(x).G_tilde(d, d) - calibrated::kVarianceKappa * (ea2 - ea * ea)) < 1e-9);
  }
}

TEST_CASE("qubit G tilde table") {
  Sampler s(31);
  for (int t = 0; t < 20; ++t) {
    const auto psi = raw_state(s, 2);
    const auto x = RealChartPoint::from_state(psi);
    const ProjectiveTensors pt(x);
    const auto f = qubit_quadratics(psi);
    std::array<Covector, 4> de;
    std::array<double, 4> e{};
    for (int k = 0; k < 4; ++k) {
      de[static_cast<std::size_t>(k)] = de_A(HermitianOperator(pauli(k)), x);
      e[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(k)] / f[0];
    }
    const double kappa = calibrated::kVarianceKappa;
    for (int k = 0; k < 4; ++k) CHECK(std::abs(pt.G_tilde(de[0], de[static_cast<std::size_t>(k)])) < 1e-12);
    for (int k = 1; k < 4; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      CHECK(std::abs(pt.G_tilde(de[kk], de[kk]) - kappa * (1.0 - e[kk] * e[kk])) < 1e-12);
    }
    CHECK(std::abs(pt.G_tilde(de[1], de[2]) + kappa * e[1] * e[2]) < 1e-12);
  }
}

TEST_CASE("Schroedinger flow on the chart matches the propagator") {
  Sampler s(32);
  for (int t = 0; t < 5; ++t) {
    const auto h = s.hermitian(3);
    const auto psi = s.unit_state(3);
    const double hbar = s.uniform(0.5, 2.0), time = 1.3;
    const auto end = integrate_flow([&](const RealChartPoint& y) { return schroedinger_vf(h, y, hbar); },
                                    RealChartPoint::from_state(psi), time, 2000);
    const ComplexVector ref = oracle::expm(-kI * time / hbar * h.matrix()) * psi.amplitudes();
    CHECK((end.amplitudes() - ref).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("Kaehler test: matrix route") {
  Sampler s(33);
  CHECK(is_kahlerian(s.hermitian(3).matrix()).kahlerian);
  const ComplexMatrix i_sigma2 = kI * pauli(2);
  const auto r = is_kahlerian(i_sigma2);
  CHECK_FALSE(r.kahlerian);
  CHECK(r.residual > 1.0);
}

TEST_CASE("Kaehler test: finite-difference route") {
  Sampler s(34);
  std::vector<RealVector> pts;
  for (int t = 0; t < 5; ++t) pts.push_back(RealChartPoint::from_state(s.unit_state(2)).packed());
  const auto a = s.hermitian(2);
  const RealFunction quad = [&](const RealVector& y) {
    return oracle::expectation(a.matrix(), oracle::unpack(y)).real();
  };
  CHECK(is_kahlerian(quad, pts).kahlerian);
  const RealFunction cubic = [](const RealVector& y) { return y(0) * y(0) * y(0); };
  CHECK_FALSE(is_kahlerian(cubic, pts).kahlerian);
  // Re(psi^T psi) is quadratic but its flow is not unitary.
  const RealFunction holo = [](const RealVector& y) {
    const auto v = oracle::unpack(y);
    return (v.transpose() * v)(0, 0).real();
  };
  CHECK_FALSE(is_kahlerian(holo, pts).kahlerian);
}

TEST_CASE("calibrated constants are reproduced by a fresh fit") {
  for (const auto& c : run_calibration(99, 120)) {
    INFO(c.name);
    CHECK(std::abs(c.fitted - c.hard_coded) < 1e-9);
    CHECK(c.max_residual < 1e-9);
  }
}

TEST_CASE("zero vector is rejected where a ray is needed") {
  const StateVector zero(ComplexVector::Zero(2));
  CHECK_THROWS_AS(e_A(HermitianOperator(pauli(3)), zero), ValidationError);
  CHECK_THROWS_AS(ProjectiveTensors(RealChartPoint::from_state(zero)), ValidationError);
}
