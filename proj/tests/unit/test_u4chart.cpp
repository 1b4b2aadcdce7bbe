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

#include <map>
#include <set>

#include "geoqm/random.hpp"
#include "geoqm/u4chart.hpp"
#include "oracles.hpp"

using namespace geoqm;

namespace {

std::vector<U4ChartPoint> random_points(std::uint64_t seed, int count) {
  Sampler s(seed);
  std::vector<U4ChartPoint> pts;
  for (int i = 0; i < count; ++i) pts.push_back(to_chart(s.hermitian(4)));
  return pts;
}

const PrintedField& printed(const std::string& name) {
  for (const auto& f : printed_fields())
    if (f.name == name) return f;
  throw std::out_of_range(name);
}

}  // namespace

TEST_CASE("chart indices are a bijection onto 0..15") {
  std::set<int> seen{chart_index::y0};
  for (int k = 1; k <= 3; ++k) {
    seen.insert(chart_index::m(k));
    seen.insert(chart_index::n(k));
    for (int j = 1; j <= 3; ++j) seen.insert(chart_index::r(k, j));
  }
  CHECK(seen.size() == 16);
  CHECK(*seen.rbegin() == 15);
  const auto& names = chart_coordinate_names();
  for (int i = 0; i < kChartDim; ++i) CHECK(chart_coordinate_index(names[static_cast<std::size_t>(i)]) == i);
  CHECK(chart_coordinate_index("lambda0") == chart_index::y0);
  CHECK(chart_coordinate_index("r23") == chart_index::r(2, 3));
  CHECK_THROWS_AS(chart_coordinate_index("r44"), ValidationError);
}

TEST_CASE("chart round trips") {
  Sampler s(51);
  for (int t = 0; t < 20; ++t) {
    const auto a = s.hermitian(4);
    const auto x = to_chart(a);
    CHECK(max_abs(from_chart(x).matrix() - a.matrix()) < 1e-13);
    CHECK((U4ChartPoint::from_vector(x.to_vector()).to_vector() - x.to_vector()).norm() == 0.0);
  }
  // (I + m.sigma) (x) (I + n.tau) sits at r = 0.
  ComplexMatrix left = pauli(0), right = pauli(0);
  for (int k = 1; k <= 3; ++k) {
    left += s.normal() * pauli(k);
    right += s.normal() * pauli(k);
  }
  const auto x = to_chart(HermitianOperator::hermitian_part(kron(left, right)));
  CHECK(x.r.cwiseAbs().maxCoeff() < 1e-14);
  CHECK(std::abs(x.y0 - 1.0) < 1e-14);
}

TEST_CASE("chart Jacobian matches finite differences of the chart map") {
  Sampler s(52);
  const auto a = s.hermitian(4);
  const RealVector t = linear_coordinates(a.matrix());
  const RealMatrix jac = chart_jacobian(to_chart(a));
  for (int i = 0; i < kChartDim; ++i) {
    auto coord = [i](const RealVector& y) {
      return to_chart(HermitianOperator::hermitian_part(from_linear_coordinates(y))).to_vector()(i);
    };
    CHECK((jac.row(i).transpose() - oracle::fd_gradient(coord, t)).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("calibration anchors for the chart brackets") {
  for (const auto& x : random_points(53, 5)) {
    const U4ChartTensors tensors;
    const RealMatrix p = tensors.poisson(x), r = tensors.jordan(x);
    CHECK(std::abs(p(chart_index::m(1), chart_index::m(2)) - x.m(2)) < 1e-12);
    CHECK(std::abs(p(chart_index::n(1), chart_index::n(2)) - x.n(2)) < 1e-12);
    CHECK(std::abs(r(chart_index::y0, chart_index::y0) - x.y0) < 1e-12);
  }
}

TEST_CASE("chain-rule tensors agree with matrix-side brackets") {
  for (const auto& x : random_points(54, 3)) {
    const U4ChartTensors tensors;
    const RealMatrix p = tensors.poisson(x), r = tensors.jordan(x);
    for (int i = 0; i < kChartDim; ++i)
      for (int j = 0; j < kChartDim; ++j) {
        CHECK(std::abs(p(i, j) - matrix_side_bracket(i, j, x, false)) < 1e-9);
        CHECK(std::abs(r(i, j) - matrix_side_bracket(i, j, x, true)) < 1e-9);
      }
    CHECK((p + p.transpose()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((r - r.transpose()).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("printed fields: agreement and sign discrepancies") {
  const auto pts = random_points(55, 20);
  std::map<std::string, std::set<std::string>> flipped, other;
  for (const auto& c : compare_printed_fields(pts)) {
    if (std::abs(c.delta()) <= 1e-9) continue;
    if (std::abs(c.derived + c.printed) <= 1e-9)
      flipped[c.field].insert(c.component);
    else
      other[c.field].insert(c.component);
  }
  CHECK(other.empty());
  for (const char* f : {"{n1,.}", "{r12,.}", "{r21,.}", "J_y0", "J_m1", "J_n1"}) {
    INFO(f);
    CHECK(flipped.count(f) == 0);
  }
  CHECK(flipped["{m1,.}"] == std::set<std::string>{"r21", "r31"});
  // Whole-field sign flips: every nonzero component.
  for (const char* f : {"{r11,.}", "J_r11", "J_r12"}) {
    INFO(f);
    CHECK(flipped[f].size() >= 12);
  }
}

TEST_CASE("printed {m1,.} and {r21,.} are not mutually antisymmetric") {
  const auto x = random_points(56, 1).front();
  const double m1_r21 = printed("{m1,.}").eval(x)(chart_index::r(2, 1));
  const double r21_m1 = printed("{r21,.}").eval(x)(chart_index::m(1));
  CHECK(std::abs(m1_r21) > 1e-3);
  CHECK(std::abs(m1_r21 - r21_m1) < 1e-12);
}

TEST_CASE("field algebra ranks") {
  const auto pts = random_points(57, 20);
  const auto r = field_algebra_report(pts.front(), pts);
  CHECK(r.hamiltonian_rank == 12);
  CHECK(r.riemann_rank == 16);
  CHECK(r.combined_rank == 16);
  CHECK(r.algebra_dimension == 31);
  CHECK(r.closure_dimension == 31);
  CHECK(r.antisymmetry_residual < 1e-12);
}

TEST_CASE("Hamiltonian fields vanish at multiples of the identity") {
  U4ChartPoint x;
  x.y0 = 0.7;
  for (int i = 0; i < kChartDim; ++i) CHECK(hamiltonian_field_chart(i, x).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(riemann_field_chart(chart_index::y0, x).cwiseAbs().maxCoeff() > 0.1);
}
