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
#include <string>
#include <vector>

#include "geoqm/lie_dual.hpp"
#include "geoqm/linops.hpp"

namespace geoqm {

/// Nonlinear chart (y0, m_k, n_j, r_kj) on Hermitian 4x4 matrices:
/// A = y0 s0(x)t0 + m_k sk(x)t0 + n_j s0(x)tj + (m_k n_j + r_kj) sk(x)tj.
struct U4ChartPoint {
  double y0 = 0.0;
  Eigen::Vector3d m = Eigen::Vector3d::Zero();
  Eigen::Vector3d n = Eigen::Vector3d::Zero();
  Eigen::Matrix3d r = Eigen::Matrix3d::Zero();

  /// Packed order y0, m1..m3, n1..n3, r11, r12, r13, r21, .., r33.
  static U4ChartPoint from_vector(const RealVector& v);
  [[nodiscard]] RealVector to_vector() const;
};

inline constexpr int kChartDim = 16;

namespace chart_index {
inline constexpr int y0 = 0;
/// k, j are 1-based as in the coordinate names.
constexpr int m(int k) { return k; }
constexpr int n(int j) { return 3 + j; }
constexpr int r(int k, int j) { return 7 + 3 * (k - 1) + (j - 1); }
}  // namespace chart_index

/// "y0", "m1", .., "r33"
const std::array<std::string, kChartDim>& chart_coordinate_names();
/// Inverse of chart_coordinate_names; throws on an unknown name.
int chart_coordinate_index(const std::string& name);

/// t_kj = Tr(A sk(x)tj) / 4 at index 4k + j.
RealVector linear_coordinates(const ComplexMatrix& a);
ComplexMatrix from_linear_coordinates(const RealVector& t);

U4ChartPoint to_chart(const HermitianOperator& a);
HermitianOperator from_chart(const U4ChartPoint& x);

/// Linear coordinates of a chart point, and the Jacobian d(chart)/d(t).
RealVector chart_to_linear(const U4ChartPoint& x);
RealMatrix chart_jacobian(const U4ChartPoint& x);

namespace calibrated {
/// Chart brackets are this multiple of the trace-pairing Lie-Poisson and
/// Jordan tensors, fixed by {m1, m2} = m3 and J_y0(y0) = y0.
inline constexpr double kChartBracketScale = 2.0;
}  // namespace calibrated

/// Poisson and Jordan tensors in chart coordinates, Jac P_lin Jac^T.
class U4ChartTensors {
 public:
  U4ChartTensors();

  [[nodiscard]] RealMatrix linear_poisson(const RealVector& t) const;
  [[nodiscard]] RealMatrix linear_jordan(const RealVector& t) const;
  [[nodiscard]] RealMatrix poisson(const U4ChartPoint& x) const;
  [[nodiscard]] RealMatrix jordan(const U4ChartPoint& x) const;

  /// {x_i, .} with components {x_i, x_k}.
  [[nodiscard]] RealVector hamiltonian_field(int coordinate, const U4ChartPoint& x) const;
  /// J_{x_i} with components R(x_i, x_k).
  [[nodiscard]] RealVector riemann_field(int coordinate, const U4ChartPoint& x) const;

  /// Fields of the linear basis functions t_alpha, expressed in the chart.
  [[nodiscard]] RealVector basis_hamiltonian_field(int alpha, const U4ChartPoint& x) const;
  [[nodiscard]] RealVector basis_riemann_field(int alpha, const U4ChartPoint& x) const;

 private:
  LieBasis basis_;
  StructureConstants sc_;
};

RealVector hamiltonian_field_chart(int coordinate, const U4ChartPoint& x);
RealVector riemann_field_chart(int coordinate, const U4ChartPoint& x);

/// Matrix-side bracket of two chart coordinates: finite-difference
/// gradients on u*(4) and the trace Lie-Poisson (or Jordan) tensor, scaled
/// by kChartBracketScale. Independent of U4ChartTensors.
double matrix_side_bracket(int i, int j, const U4ChartPoint& x, bool jordan, double step = 1e-5);

/// Transcribed vector fields used as test vectors.
struct PrintedField {
  std::string name;     // e.g. "{m1,.}" or "J_r11"
  int coordinate = 0;   // chart index of the generating coordinate
  bool hamiltonian = true;
  std::function<RealVector(const U4ChartPoint&)> eval;
};

const std::vector<PrintedField>& printed_fields();

struct FieldComparison {
  std::string field;
  std::string component;
  int point_id = 0;
  double derived = 0.0;
  double printed = 0.0;
  [[nodiscard]] double delta() const { return derived - printed; }
};

/// Every (field, component, point) triple; callers filter by |delta|.
std::vector<FieldComparison> compare_printed_fields(const std::vector<U4ChartPoint>& points);

struct FieldAlgebraReport {
  int hamiltonian_rank = 0;   // pointwise span of the 16 coordinate fields
  int riemann_rank = 0;
  int combined_rank = 0;
  int algebra_dimension = 0;  // span of the 32 basis fields as fields
  int closure_dimension = 0;  // same, after adding all pairwise brackets
  double antisymmetry_residual = 0.0;
};

/// Ranks at one point; algebra_dimension and closure_dimension treat the
/// basis fields as functions sampled over all of `points`.
FieldAlgebraReport field_algebra_report(const U4ChartPoint& at, const std::vector<U4ChartPoint>& points);

}  // namespace geoqm
