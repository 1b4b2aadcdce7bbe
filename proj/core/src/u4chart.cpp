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

#include "geoqm/u4chart.hpp"

#include <cmath>

namespace geoqm {

namespace {

const ComplexMatrix& product_pauli(int alpha) {
  static const std::array<ComplexMatrix, 16> table = [] {
    std::array<ComplexMatrix, 16> t;
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) t[static_cast<std::size_t>(4 * k + j)] = kron(pauli(k), pauli(j));
    return t;
  }();
  return table.at(static_cast<std::size_t>(alpha));
}

int rank_of(const RealMatrix& m, double rel_tol = 1e-7) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<RealMatrix> svd(m);
  const RealVector s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++rank;
  return rank;
}

}  // namespace

U4ChartPoint U4ChartPoint::from_vector(const RealVector& v) {
  if (v.size() != kChartDim) throw ValidationError("U4ChartPoint: expected 16 coordinates");
  U4ChartPoint x;
  x.y0 = v(0);
  for (int k = 1; k <= 3; ++k) {
    x.m(k - 1) = v(chart_index::m(k));
    x.n(k - 1) = v(chart_index::n(k));
    for (int j = 1; j <= 3; ++j) x.r(k - 1, j - 1) = v(chart_index::r(k, j));
  }
  return x;
}

RealVector U4ChartPoint::to_vector() const {
  RealVector v(kChartDim);
  v(0) = y0;
  for (int k = 1; k <= 3; ++k) {
    v(chart_index::m(k)) = m(k - 1);
    v(chart_index::n(k)) = n(k - 1);
    for (int j = 1; j <= 3; ++j) v(chart_index::r(k, j)) = r(k - 1, j - 1);
  }
  return v;
}

const std::array<std::string, kChartDim>& chart_coordinate_names() {
  static const std::array<std::string, kChartDim> names = {
      "y0", "m1", "m2", "m3", "n1", "n2", "n3", "r11", "r12", "r13", "r21", "r22", "r23", "r31", "r32", "r33"};
  return names;
}

int chart_coordinate_index(const std::string& name) {
  const auto& names = chart_coordinate_names();
  for (int i = 0; i < kChartDim; ++i)
    if (names[static_cast<std::size_t>(i)] == name) return i;
  if (name == "lambda0") return chart_index::y0;
  throw ValidationError("unknown chart coordinate '" + name + "'");
}

RealVector linear_coordinates(const ComplexMatrix& a) {
  if (a.rows() != 4 || a.cols() != 4) throw ValidationError("linear_coordinates: expected a 4x4 matrix");
  RealVector t(16);
  for (int alpha = 0; alpha < 16; ++alpha) t(alpha) = 0.25 * (a * product_pauli(alpha)).trace().real();
  return t;
}

ComplexMatrix from_linear_coordinates(const RealVector& t) {
  if (t.size() != 16) throw ValidationError("from_linear_coordinates: expected 16 coordinates");
  ComplexMatrix a = ComplexMatrix::Zero(4, 4);
  for (int alpha = 0; alpha < 16; ++alpha) a += t(alpha) * product_pauli(alpha);
  return a;
}

U4ChartPoint to_chart(const HermitianOperator& a) {
  if (a.dim() != 4) throw ValidationError("to_chart: operator must act on C^2 (x) C^2");
  const RealVector t = linear_coordinates(a.matrix());
  U4ChartPoint x;
  x.y0 = t(0);
  for (int k = 1; k <= 3; ++k) {
    x.m(k - 1) = t(4 * k);
    x.n(k - 1) = t(k);
  }
  for (int k = 1; k <= 3; ++k)
    for (int j = 1; j <= 3; ++j) x.r(k - 1, j - 1) = t(4 * k + j) - x.m(k - 1) * x.n(j - 1);
  return x;
}

RealVector chart_to_linear(const U4ChartPoint& x) {
  RealVector t(16);
  t(0) = x.y0;
  for (int k = 1; k <= 3; ++k) {
    t(4 * k) = x.m(k - 1);
    t(k) = x.n(k - 1);
    for (int j = 1; j <= 3; ++j) t(4 * k + j) = x.m(k - 1) * x.n(j - 1) + x.r(k - 1, j - 1);
  }
  return t;
}

HermitianOperator from_chart(const U4ChartPoint& x) {
  return HermitianOperator::hermitian_part(from_linear_coordinates(chart_to_linear(x)));
}

RealMatrix chart_jacobian(const U4ChartPoint& x) {
  RealMatrix jac = RealMatrix::Zero(kChartDim, 16);
  jac(chart_index::y0, 0) = 1.0;
  for (int k = 1; k <= 3; ++k) {
    jac(chart_index::m(k), 4 * k) = 1.0;
    jac(chart_index::n(k), k) = 1.0;
  }
  for (int k = 1; k <= 3; ++k) {
    for (int j = 1; j <= 3; ++j) {
      const int row = chart_index::r(k, j);
      jac(row, 4 * k + j) = 1.0;
      jac(row, 4 * k) = -x.n(j - 1);
      jac(row, j) = -x.m(k - 1);
    }
  }
  return jac;
}

U4ChartTensors::U4ChartTensors()
    : basis_(LieBasis::two_qubit_product()), sc_(structure_constants(basis_)) {}

RealMatrix U4ChartTensors::linear_poisson(const RealVector& t) const {
  // Basis elements are S/sqrt(2), so {t_a, t_b}_trace = C_abc t_c / sqrt(2).
  return calibrated::kChartBracketScale / std::sqrt(2.0) * sc_.poisson_tensor(t);
}

RealMatrix U4ChartTensors::linear_jordan(const RealVector& t) const {
  return calibrated::kChartBracketScale / std::sqrt(2.0) * sc_.jordan_tensor(t);
}

RealMatrix U4ChartTensors::poisson(const U4ChartPoint& x) const {
  const RealMatrix jac = chart_jacobian(x);
  return jac * linear_poisson(chart_to_linear(x)) * jac.transpose();
}

RealMatrix U4ChartTensors::jordan(const U4ChartPoint& x) const {
  const RealMatrix jac = chart_jacobian(x);
  return jac * linear_jordan(chart_to_linear(x)) * jac.transpose();
}

RealVector U4ChartTensors::hamiltonian_field(int coordinate, const U4ChartPoint& x) const {
  if (coordinate < 0 || coordinate >= kChartDim) throw ValidationError("hamiltonian_field: bad coordinate");
  return poisson(x).row(coordinate).transpose();
}

RealVector U4ChartTensors::riemann_field(int coordinate, const U4ChartPoint& x) const {
  if (coordinate < 0 || coordinate >= kChartDim) throw ValidationError("riemann_field: bad coordinate");
  return jordan(x).row(coordinate).transpose();
}

RealVector U4ChartTensors::basis_hamiltonian_field(int alpha, const U4ChartPoint& x) const {
  if (alpha < 0 || alpha >= 16) throw ValidationError("basis_hamiltonian_field: bad index");
  return chart_jacobian(x) * linear_poisson(chart_to_linear(x)).row(alpha).transpose();
}

RealVector U4ChartTensors::basis_riemann_field(int alpha, const U4ChartPoint& x) const {
  if (alpha < 0 || alpha >= 16) throw ValidationError("basis_riemann_field: bad index");
  return chart_jacobian(x) * linear_jordan(chart_to_linear(x)).row(alpha).transpose();
}

namespace {
const U4ChartTensors& shared_tensors() {
  static const U4ChartTensors t;
  return t;
}
}  // namespace

RealVector hamiltonian_field_chart(int coordinate, const U4ChartPoint& x) {
  return shared_tensors().hamiltonian_field(coordinate, x);
}

RealVector riemann_field_chart(int coordinate, const U4ChartPoint& x) {
  return shared_tensors().riemann_field(coordinate, x);
}

double matrix_side_bracket(int i, int j, const U4ChartPoint& x, bool jordan, double step) {
  if (i < 0 || j < 0 || i >= kChartDim || j >= kChartDim)
    throw ValidationError("matrix_side_bracket: bad coordinate");
  static const LieBasis basis = LieBasis::gell_mann(4);
  auto coordinate = [](int idx) -> DualFunction {
    return [idx](const DualVector& xi) {
      return to_chart(HermitianOperator::hermitian_part(xi.matrix())).to_vector()(idx);
    };
  };
  const DualVector xi(from_chart(x).matrix());
  const double raw = jordan ? jordan_tensor(coordinate(i), coordinate(j), xi, basis, step)
                            : lie_poisson(coordinate(i), coordinate(j), xi, basis, step);
  return calibrated::kChartBracketScale * raw;
}

std::vector<FieldComparison> compare_printed_fields(const std::vector<U4ChartPoint>& points) {
  const auto& names = chart_coordinate_names();
  std::vector<FieldComparison> out;
  for (const auto& field : printed_fields()) {
    for (std::size_t p = 0; p < points.size(); ++p) {
      const RealVector derived = field.hamiltonian ? hamiltonian_field_chart(field.coordinate, points[p])
                                                   : riemann_field_chart(field.coordinate, points[p]);
      const RealVector printed = field.eval(points[p]);
      for (int c = 0; c < kChartDim; ++c)
        out.push_back({field.name, names[static_cast<std::size_t>(c)], static_cast<int>(p), derived(c), printed(c)});
    }
  }
  return out;
}

FieldAlgebraReport field_algebra_report(const U4ChartPoint& at, const std::vector<U4ChartPoint>& points) {
  const auto& t = shared_tensors();
  FieldAlgebraReport rep;
  rep.hamiltonian_rank = rank_of(t.poisson(at));
  rep.riemann_rank = rank_of(t.jordan(at));
  RealMatrix both(kChartDim, 2 * kChartDim);
  both << t.poisson(at), t.jordan(at);
  rep.combined_rank = rank_of(both);

  if (points.empty()) return rep;
  const auto np = static_cast<Eigen::Index>(points.size());
  constexpr int kFields = 32;
  auto field = [&](int f, const U4ChartPoint& x) {
    return f < 16 ? t.basis_hamiltonian_field(f, x) : t.basis_riemann_field(f - 16, x);
  };
  // Sampled fields and their chart Jacobians by central differences.
  std::vector<std::vector<RealVector>> val(kFields, std::vector<RealVector>(points.size()));
  std::vector<std::vector<RealMatrix>> jac(kFields, std::vector<RealMatrix>(points.size()));
  constexpr double h = 1e-5;
  for (std::size_t p = 0; p < points.size(); ++p) {
    const RealVector base = points[p].to_vector();
    for (int f = 0; f < kFields; ++f) {
      val[f][p] = field(f, points[p]);
      jac[f][p] = RealMatrix(kChartDim, kChartDim);
    }
    for (int c = 0; c < kChartDim; ++c) {
      RealVector up = base, dn = base;
      up(c) += h;
      dn(c) -= h;
      const auto xu = U4ChartPoint::from_vector(up), xd = U4ChartPoint::from_vector(dn);
      for (int f = 0; f < kFields; ++f) jac[f][p].col(c) = (field(f, xu) - field(f, xd)) / (2.0 * h);
    }
  }
  RealMatrix fields(kChartDim * np, kFields);
  for (int f = 0; f < kFields; ++f)
    for (Eigen::Index p = 0; p < np; ++p) fields.block(kChartDim * p, f, kChartDim, 1) = val[f][p];
  rep.algebra_dimension = rank_of(fields);

  const int pairs = kFields * (kFields - 1) / 2;
  RealMatrix closure(kChartDim * np, kFields + pairs);
  closure.leftCols(kFields) = fields;
  int col = kFields;
  double anti = 0.0;
  for (int a = 0; a < kFields; ++a) {
    for (int b = a + 1; b < kFields; ++b, ++col) {
      for (Eigen::Index p = 0; p < np; ++p) {
        const auto pp = static_cast<std::size_t>(p);
        const RealVector ab = jac[b][pp] * val[a][pp] - jac[a][pp] * val[b][pp];
        const RealVector ba = jac[a][pp] * val[b][pp] - jac[b][pp] * val[a][pp];
        anti = std::max(anti, (ab + ba).cwiseAbs().maxCoeff());
        closure.block(kChartDim * p, col, kChartDim, 1) = ab;
      }
    }
  }
  rep.closure_dimension = rank_of(closure, 1e-6);
  rep.antisymmetry_residual = anti;
  return rep;
}

}  // namespace geoqm
