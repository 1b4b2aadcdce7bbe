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

#include "geoqm/random.hpp"
#include "geoqm/witness.hpp"
#include "oracles.hpp"

using namespace geoqm;

namespace {

RhoTParams random_interior(Sampler& s) {
  const double a = s.uniform(0.05, 0.6), b = s.uniform(0.05, 0.9 - a);
  const double c = s.uniform(0.05, 0.95) * 2.0 * std::sqrt(a * b);
  return {a, b, c, s.uniform(0.0, 2.0 * std::numbers::pi)};
}

}  // namespace

TEST_CASE("rho_t validation") {
  CHECK_NOTHROW(rho_t({0.3, 0.3, 0.5, 0.0}));
  CHECK_THROWS_WITH_AS(rho_t({0.1, 0.1, 0.5, 0.0}), doctest::Contains("eigenvalue"), ValidationError);
  CHECK_THROWS_AS(rho_t({0.7, 0.5, 0.1, 0.0}), ValidationError);
  CHECK_THROWS_AS(rho_t({-0.1, 0.5, 0.1, 0.0}), ValidationError);
}

TEST_CASE("closed-form spectrum matches diagonalisation") {
  Sampler s(61);
  for (int t = 0; t < 50; ++t) {
    const auto p = random_interior(s);
    auto cf = rho_t_spectrum(p);
    std::sort(cf.begin(), cf.end());
    const RealVector ev = rho_t(p).spectrum();
    for (int k = 0; k < 4; ++k) CHECK(std::abs(ev(k) - cf[static_cast<std::size_t>(k)]) < 1e-14);
  }
}

TEST_CASE("concurrence of reference states") {
  ComplexVector bell = ComplexVector::Zero(4);
  bell(1) = 1.0 / std::sqrt(2.0);
  bell(2) = -1.0 / std::sqrt(2.0);
  CHECK(std::abs(concurrence(DensityState::pure(StateVector(bell))) - 1.0) < 1e-12);
  Sampler s(62);
  const ComplexMatrix prod = kron(s.density(2).matrix(), s.density(2).matrix());
  CHECK(concurrence(DensityState(prod)) < 1e-7);
  CHECK(concurrence(DensityState(ComplexMatrix::Identity(4, 4) / 4.0)) == 0.0);
}

TEST_CASE("concurrence agrees with the non-Hermitian Wootters route") {
  Sampler s(63);
  for (int t = 0; t < 50; ++t) {
    const auto rho = s.density(4);
    CHECK(std::abs(concurrence(rho) - oracle::concurrence_wootters(rho.matrix())) < 1e-7);
  }
}

TEST_CASE("concurrence of rho_t equals c") {
  Sampler s(64);
  for (int t = 0; t < 100; ++t) {
    const auto p = random_interior(s);
    CHECK(std::abs(concurrence(rho_t(p)) - p.c) < 1e-12);
  }
}

TEST_CASE("entropy against the printed two-qubit expression") {
  Sampler s(65);
  for (int t = 0; t < 100; ++t) {
    const auto p = random_interior(s);
    const double printed = oracle::printed_two_s(p.a, p.b, p.c);
    CHECK(std::abs(std::abs(printed / 2.0) - von_neumann_entropy(rho_t(p))) < 1e-10);
    CHECK(printed < 0.0);
  }
}

TEST_CASE("entanglement entropy of pure states") {
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(pure_state_entropy(StateVector(bell)) - std::log(2.0)) < 1e-13);
  ComplexVector prod = ComplexVector::Zero(4);
  prod(0) = 1.0;
  CHECK(std::abs(pure_state_entropy(StateVector(prod))) < 1e-14);
}

TEST_CASE("analytic differentials match finite differences of the matrix functions") {
  Sampler s(66);
  for (int t = 0; t < 20; ++t) {
    const auto p = random_interior(s);
    const auto w = witness_differentials(p);
    auto entropy = [&](const Eigen::VectorXd& y) { return von_neumann_entropy(rho_t({y(0), y(1), y(2), y(3)})); };
    auto conc = [&](const Eigen::VectorXd& y) { return concurrence(rho_t({y(0), y(1), y(2), y(3)})); };
    Eigen::VectorXd y(4);
    y << p.a, p.b, p.c, p.phi;
    const Eigen::VectorXd gs = oracle::fd_gradient(entropy, y, 1e-5);
    const Eigen::VectorXd gc = oracle::fd_gradient(conc, y, 1e-5);
    for (int k = 0; k < 4; ++k) {
      CHECK(std::abs(w.dS[static_cast<std::size_t>(k)] - gs(k)) < 1e-7);
      CHECK(std::abs(w.dC[static_cast<std::size_t>(k)] - gc(k)) < 1e-7);
    }
    CHECK(std::abs(w.S - von_neumann_entropy(rho_t(p))) < 1e-13);
  }
}

TEST_CASE("a <-> b symmetry of the entropy derivative") {
  const auto w = witness_differentials({0.3, 0.3, 0.4, 1.0});
  CHECK(std::abs(w.dS[0] - w.dS[1]) < 1e-13);
  CHECK(std::abs(w.dS[3]) < 1e-15);
}

TEST_CASE("wedge norm is the norm of all 2x2 minors") {
  CHECK(wedge_norm({1, 0, 0, 0}, {0, 1, 0, 0}) == doctest::Approx(1.0));
  CHECK(wedge_norm({1, 2, 3, 4}, {2, 4, 6, 8}) == 0.0);
  CHECK(wedge_norm({3, 0, 0, 0}, {0, 0, 2, 0}) == doctest::Approx(6.0));
}

TEST_CASE("S and C Poisson-commute on u*(4)") {
  Sampler s(67);
  for (int t = 0; t < 10; ++t) {
    const double a = s.uniform(0.15, 0.4), b = s.uniform(0.15, 0.4);
    const RhoTParams p{a, b, s.uniform(0.2, 0.9) * 2.0 * std::sqrt(a * b), s.uniform(0.0, 6.0)};
    CHECK(std::abs(poisson_bracket_SC(p)) < 1e-7);
  }
}

TEST_CASE("independence locus on the symmetric slice") {
  for (int i = 1; i <= 20; ++i) {
    const double a = 1.0 / 3.0 + (1.0 / 6.0) * i / 21.0;
    const auto lp = locus_on_slice(a);
    REQUIRE(lp.c.has_value());
    CHECK(std::abs(*lp.c - locus_closed_form(a)) < 1e-6);
    CHECK(witness_differentials({a, a, *lp.c, 0.0}).wedge_norm < 1e-9);
  }
  CHECK_FALSE(locus_on_slice(0.25).c.has_value());
  CHECK_THROWS_AS(locus_closed_form(0.2), ValidationError);
}

TEST_CASE("differentials are independent away from the locus") {
  Sampler s(68);
  int tested = 0;
  while (tested < 30) {
    const auto p = random_interior(s);
    if (std::abs(p.a - p.b) < 0.05 && p.a > 1.0 / 3.0 && p.a < 0.5) continue;
    CHECK(witness_differentials(p).wedge_norm > 1e-3);
    ++tested;
  }
}
