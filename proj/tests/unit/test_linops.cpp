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

#include "geoqm/linops.hpp"
#include "geoqm/random.hpp"
#include "oracles.hpp"

using namespace geoqm;

TEST_CASE("HermitianOperator validates its input") {
  ComplexMatrix m(2, 2);
  m << 1, kI, kI, 2;
  CHECK_THROWS_AS(HermitianOperator{m}, ValidationError);
  CHECK_THROWS_AS(HermitianOperator{ComplexMatrix(2, 3)}, ValidationError);
  const auto h = HermitianOperator::hermitian_part(m);
  CHECK(max_abs(h.matrix() - h.matrix().adjoint()) == 0.0);
  m(0, 1) = 1e-13 * kI;
  m(1, 0) = 0.0;
  CHECK_NOTHROW(HermitianOperator{m});
}

TEST_CASE("eigendecomposition reconstructs random Hermitian matrices") {
  Sampler s(11);
  for (int t = 0; t < 50; ++t) {
    const auto a = s.hermitian(2 + t % 5);
    const auto dec = eig_herm(a);
    const ComplexMatrix back = dec.vectors * dec.values.cast<cplx>().asDiagonal() * dec.vectors.adjoint();
    CHECK(max_abs(back - a.matrix()) < 1e-12);
    for (Eigen::Index i = 1; i < dec.values.size(); ++i) CHECK(dec.values(i) >= dec.values(i - 1));
  }
}

TEST_CASE("propagator matches a Taylor-series exponential") {
  Sampler s(12);
  for (int t = 0; t < 20; ++t) {
    const auto h = s.hermitian(3);
    const double time = s.uniform(-2.0, 2.0), hbar = s.uniform(0.5, 2.0);
    const ComplexMatrix u = propagator_matrix(h, time, hbar);
    CHECK(is_unitary(u, 1e-12));
    CHECK(max_abs(u - oracle::expm(-kI * time / hbar * h.matrix())) < 1e-11);
  }
  CHECK_THROWS_AS(propagator_matrix(s.hermitian(2), 1.0, 0.0), ValidationError);
}

TEST_CASE("evolve keeps unit states on the unit sphere") {
  Sampler s(13);
  const auto h = s.hermitian(4);
  const auto psi = s.unit_state(4);
  const auto out = evolve(h, psi, 3.7);
  CHECK(out.normalization() == Normalization::unit);
  CHECK(std::abs(out.norm() - 1.0) < 1e-13);
}

TEST_CASE("DensityState rejects invalid matrices") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.2;
  m(1, 1) = -0.2;
  CHECK_THROWS_WITH_AS(DensityState{m}, doctest::Contains("negative eigenvalue"), ValidationError);
  m(1, 1) = 0.1;
  CHECK_THROWS_WITH_AS(DensityState{m}, doctest::Contains("trace"), ValidationError);
  CHECK_THROWS_AS(DensityState::pure(StateVector(ComplexVector::Zero(3))), ValidationError);
}

TEST_CASE("partial trace of Bell and product states") {
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const auto rho = DensityState::pure(StateVector(bell));
  for (auto side : {Subsystem::first, Subsystem::second})
    CHECK(max_abs(partial_trace(rho, {}, side).matrix() - 0.5 * ComplexMatrix::Identity(2, 2)) < 1e-15);

  Sampler s(14);
  const auto a = s.density(2), b = s.density(3);
  const ComplexMatrix ab = kron(a.matrix(), b.matrix());
  CHECK(max_abs(partial_trace(ab, {2, 3}, Subsystem::second) - a.matrix()) < 1e-14);
  CHECK(max_abs(partial_trace(ab, {2, 3}, Subsystem::first) - b.matrix()) < 1e-14);
  CHECK_THROWS_AS(partial_trace(ab, {2, 2}, Subsystem::first), ValidationError);
}

TEST_CASE("PSD square root squares back") {
  Sampler s(15);
  for (int t = 0; t < 20; ++t) {
    const auto rho = s.density(4);
    const ComplexMatrix r = matrix_sqrt_psd(rho.matrix());
    CHECK(max_abs(r * r - rho.matrix()) < 1e-13);
  }
  ComplexMatrix neg = -ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(matrix_sqrt_psd(neg), ValidationError);
}

TEST_CASE("Pauli matrices agree with the literal table") {
  for (int k = 0; k < 4; ++k) CHECK(max_abs(pauli(k) - oracle::pauli(k)) == 0.0);
  CHECK(max_abs(pauli(1) * pauli(2) - kI * pauli(3)) == 0.0);
  CHECK_THROWS_AS(pauli(4), ValidationError);
}

TEST_CASE("trace pairing and commutators") {
  Sampler s(16);
  const auto a = s.hermitian(3), b = s.hermitian(3);
  CHECK(std::abs(trace_inner(a.matrix(), b.matrix()).imag()) < 1e-13);
  CHECK(std::abs(commutator(a.matrix(), b.matrix()).trace()) < 1e-13);
  CHECK(max_abs(anticommutator(a.matrix(), b.matrix()) + commutator(a.matrix(), b.matrix()) -
                2.0 * a.matrix() * b.matrix()) < 1e-13);
}
