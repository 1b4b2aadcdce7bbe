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

#include "geoqm/kahler.hpp"
#include "geoqm/lie_dual.hpp"
#include "geoqm/random.hpp"
#include "oracles.hpp"

using namespace geoqm;

namespace {

const double r3 = std::sqrt(3.0);

}  // namespace

TEST_CASE("Gell-Mann basis for n = 3 matches the literal matrices") {
  const LieBasis b = LieBasis::gell_mann(3);
  const auto lit = oracle::gell_mann3();
  REQUIRE(b.size() == 9);
  for (int mu = 0; mu < 9; ++mu) CHECK(max_abs(b[mu] - lit[static_cast<std::size_t>(mu)]) < 1e-15);
}

TEST_CASE("basis validation") {
  std::vector<ComplexMatrix> mats(4, ComplexMatrix::Identity(2, 2));
  CHECK_THROWS_AS(LieBasis{mats}, ValidationError);
  CHECK_THROWS_AS(LieBasis::gell_mann(5), ValidationError);
  for (int n = 2; n <= 4; ++n) {
    const LieBasis b = LieBasis::gell_mann(n);
    for (int mu = 0; mu < b.size(); ++mu)
      for (int nu = 0; nu < b.size(); ++nu)
        CHECK(std::abs((b[mu] * b[nu]).trace() - (mu == nu ? 2.0 : 0.0)) < 1e-14);
  }
}

TEST_CASE("printed u(3) structure constants") {
  const auto sc = structure_constants(LieBasis::gell_mann(3));
  CHECK(sc.C(1, 2, 3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(sc.C(4, 5, 8) - r3 / 2) < 1e-12);
  CHECK(std::abs(sc.C(6, 7, 8) - r3 / 2) < 1e-12);
  CHECK(std::abs(sc.C(1, 4, 7) - 0.5) < 1e-12);
  CHECK(std::abs(sc.C(1, 5, 6) + 0.5) < 1e-12);
  CHECK(std::abs(sc.C(2, 4, 6) - 0.5) < 1e-12);
  CHECK(std::abs(sc.C(2, 5, 7) - 0.5) < 1e-12);
  CHECK(std::abs(sc.C(3, 4, 5) - 0.5) < 1e-12);
  CHECK(std::abs(sc.C(3, 6, 7) + 0.5) < 1e-12);

  for (int j = 1; j <= 3; ++j) {
    CHECK(std::abs(sc.d(j, j, 8) - 1 / r3) < 1e-12);
    CHECK(std::abs(sc.d(j, 8, j) - 1 / r3) < 1e-12);
  }
  CHECK(std::abs(sc.d(8, 8, 8) + 1 / r3) < 1e-12);
  for (int j = 4; j <= 7; ++j) {
    CHECK(std::abs(sc.d(8, j, j) + 1 / (2 * r3)) < 1e-12);
    CHECK(std::abs(sc.d(j, j, 8) + 1 / (2 * r3)) < 1e-12);
    const double sign = j <= 5 ? 1.0 : -1.0;
    CHECK(std::abs(sc.d(3, j, j) - sign * 0.5) < 1e-12);
  }
  CHECK(std::abs(sc.d(1, 4, 6) - 0.5) < 1e-12);
  CHECK(std::abs(sc.d(1, 5, 7) - 0.5) < 1e-12);
  CHECK(std::abs(sc.d(2, 4, 7) + 0.5) < 1e-12);
  CHECK(std::abs(sc.d(2, 5, 6) - 0.5) < 1e-12);
  CHECK(std::abs(sc.d(4, 2, 7) + 0.5) < 1e-12);
  CHECK(std::abs(sc.d(7, 2, 4) + 0.5) < 1e-12);
}

TEST_CASE("identity channel of d is symmetric") {
  const auto sc = structure_constants(LieBasis::gell_mann(3));
  const double v = std::sqrt(2.0 / 3.0);
  for (int j = 1; j <= 8; ++j) {
    CHECK(std::abs(sc.d(j, j, 0) - v) < 1e-12);
    CHECK(std::abs(sc.d(0, j, j) - v) < 1e-12);
    CHECK(std::abs(sc.d(j, 0, j) - v) < 1e-12);
  }
}

TEST_CASE("structure constants reconstruct every product and have the right symmetry") {
  for (int n = 2; n <= 4; ++n) {
    const LieBasis b = LieBasis::gell_mann(n);
    const auto sc = structure_constants(b);
    for (int mu = 0; mu < b.size(); ++mu)
      for (int nu = 0; nu < b.size(); ++nu) {
        CHECK(max_abs(sc.product(b, mu, nu) - b[mu] * b[nu]) < 1e-12);
        for (int rho = 0; rho < b.size(); ++rho) {
          CHECK(std::abs(sc.C(mu, nu, rho) + sc.C(nu, mu, rho)) < 1e-13);
          CHECK(std::abs(sc.C(mu, nu, rho) - sc.C(nu, rho, mu)) < 1e-13);
          CHECK(std::abs(sc.d(mu, nu, rho) - sc.d(nu, mu, rho)) < 1e-13);
          CHECK(std::abs(sc.d(mu, nu, rho) - sc.d(mu, rho, nu)) < 1e-13);
        }
      }
  }
}

TEST_CASE("two-qubit product basis is trace orthonormal") {
  const LieBasis b = LieBasis::two_qubit_product();
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 4; ++j)
      CHECK(max_abs(b[4 * k + j] - kron(oracle::pauli(k), oracle::pauli(j)) / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("Lie-Poisson bracket on linear functions closes on the commutator") {
  Sampler s(41);
  for (int n = 2; n <= 4; ++n) {
    const LieBasis basis = LieBasis::gell_mann(n);
    for (int t = 0; t < 5; ++t) {
      const auto u = s.hermitian(n), v = s.hermitian(n);
      const DualVector xi(s.hermitian(n).matrix());
      const double direct = (xi.matrix() * (-kI) * commutator(u.matrix(), v.matrix())).trace().real();
      CHECK(std::abs(lie_poisson(u.matrix(), v.matrix(), xi) - direct) < 1e-12);
      const double fd = lie_poisson(linear_function(u.matrix()), linear_function(v.matrix()), xi, basis);
      CHECK(std::abs(fd - direct) < 1e-8);
      const double jd = (xi.matrix() * anticommutator(u.matrix(), v.matrix())).trace().real();
      CHECK(std::abs(jordan_tensor(linear_function(u.matrix()), linear_function(v.matrix()), xi, basis) - jd) <
            1e-8);
    }
  }
}

TEST_CASE("coordinate tensors agree with the matrix brackets") {
  Sampler s(42);
  const LieBasis basis = LieBasis::gell_mann(3);
  const auto sc = structure_constants(basis);
  const DualVector xi(s.hermitian(3).matrix());
  const RealVector x = xi.coefficients(basis);
  const RealMatrix pi = sc.poisson_tensor(x), r = sc.jordan_tensor(x);
  for (int mu = 0; mu < 9; ++mu)
    for (int nu = 0; nu < 9; ++nu) {
      // Coordinates x_mu = Tr(xi l_mu)/2 have gradient l_mu/2.
      CHECK(std::abs(lie_poisson(basis[mu] / 2.0, basis[nu] / 2.0, xi) - pi(mu, nu)) < 1e-12);
      CHECK(std::abs(jordan_tensor(basis[mu] / 2.0, basis[nu] / 2.0, xi) - r(mu, nu)) < 1e-12);
    }
}

TEST_CASE("momentum map: equivariance, pullbacks and bracket intertwining") {
  Sampler s(43);
  for (int n = 2; n <= 4; ++n)
    for (int t = 0; t < 50; ++t) {
      const auto a = s.hermitian(n), b = s.hermitian(n);
      const StateVector psi(s.uniform(0.5, 2.0) * s.unit_state(n).amplitudes());
      CHECK(check_equivariance(s.unitary(n), psi) < 1e-12);
      const auto r = pullback_checks(a, b, psi);
      CHECK(r.max() < 1e-9);
    }
  CHECK_THROWS_AS(check_equivariance(2.0 * ComplexMatrix::Identity(2, 2), s.unit_state(2)), ValidationError);
  CHECK_THROWS_AS(momentum_map_projective(StateVector(ComplexVector::Zero(2))), ValidationError);
}

TEST_CASE("DualVector rejects non-Hermitian input") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(DualVector{m}, ValidationError);
}

TEST_CASE("Heisenberg flow is coadjoint conjugation") {
  Sampler s(44);
  const LieBasis basis = LieBasis::gell_mann(3);
  const auto sc = structure_constants(basis);
  const auto h = s.hermitian(3);
  const DualVector xi0(s.density(3).matrix());
  const double t = 0.9, hbar = 1.3;
  const DualVector xi = heisenberg_flow(basis, sc, h, xi0, t, 400, hbar);
  const ComplexMatrix u = oracle::expm(-kI * t / hbar * h.matrix());
  CHECK(max_abs(xi.matrix() - u * xi0.matrix() * u.adjoint()) < 1e-9);
}
