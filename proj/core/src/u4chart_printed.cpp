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

// Hand transcription of the listed two-qubit Hamiltonian and Riemannian
// vector fields. These are test vectors only; the library computes the
// fields by the chain rule in u4chart.cpp.

#include "geoqm/u4chart.hpp"

namespace geoqm {

namespace {

struct Vars {
  double y0;
  double m1, m2, m3;
  double n1, n2, n3;
  double r11, r12, r13, r21, r22, r23, r31, r32, r33;

  explicit Vars(const U4ChartPoint& x)
      : y0(x.y0),
        m1(x.m(0)), m2(x.m(1)), m3(x.m(2)),
        n1(x.n(0)), n2(x.n(1)), n3(x.n(2)),
        r11(x.r(0, 0)), r12(x.r(0, 1)), r13(x.r(0, 2)),
        r21(x.r(1, 0)), r22(x.r(1, 1)), r23(x.r(1, 2)),
        r31(x.r(2, 0)), r32(x.r(2, 1)), r33(x.r(2, 2)) {}
};

using chart_index::m;
using chart_index::n;
using chart_index::r;
constexpr int y0 = chart_index::y0;

RealVector ham_m1(const U4ChartPoint& x) {
  const Vars v(x);
  RealVector f = RealVector::Zero(kChartDim);
  f(r(2, 3)) += v.r33;
  f(r(3, 3)) += -v.r23;
  f(r(2, 2)) += v.r32;
  f(r(3, 2)) += -v.r22;
  f(r(3, 1)) += v.r21;
  f(r(2, 1)) += -v.r31;
  f(m(3)) += -v.m2;
  f(m(2)) += v.m3;
  return f;
}

RealVector ham_n1(const U4ChartPoint& x) {
  const Vars v(x);
  RealVector f = RealVector::Zero(kChartDim);
  f(r(3, 3)) += -v.r32;
  f(r(3, 2)) += v.r33;
  f(r(2, 3)) += -v.r22;
  f(r(2, 2)) += v.r23;
  f(r(1, 3)) += -v.r12;
  f(r(1, 2)) += v.r13;
  f(n(3)) += -v.n2;
  f(n(2)) += v.n3;
  return f;
}

RealVector ham_r11(const U4ChartPoint& x) {
  const Vars v(x);
  RealVector f = RealVector::Zero(kChartDim);
  f(n(3)) += v.r12;
  f(r(1, 3)) += -((-1 + v.m1 * v.m1) * v.n2 + 2 * v.m1 * v.r12);
  f(n(2)) += -v.r13;
  f(r(1, 2)) += (-1 + v.m1 * v.m1) * v.n3 + 2 * v.m1 * v.r13;
  f(m(3)) += v.r21;
  f(r(3, 1)) += -(v.m2 * (-1 + v.n1 * v.n1) + 2 * v.n1 * v.r21);
  f(m(2)) += -v.r31;
  f(r(2, 1)) += v.m3 * (-1 + v.n1 * v.n1) + 2 * v.n1 * v.r31;
  f(r(2, 2)) += v.m2 * v.r13 + v.m1 * (v.m2 * v.n3 + v.r23) + v.n2 * (v.m3 * v.n1 + v.r31) + v.n1 * v.r32;
  f(r(3, 3)) += -(v.m3 * v.r12 + v.n3 * (v.m2 * v.n1 + v.r21) + v.n1 * v.r23 + v.m1 * (v.m3 * v.n2 + v.r32));
  f(r(2, 3)) += -v.m2 * v.r12 - v.m1 * (v.m2 * v.n2 + v.r22) + v.n3 * (v.m3 * v.n1 + v.r31) + v.n1 * v.r33;
  f(r(3, 2)) += v.m3 * v.r13 - v.n2 * (v.m2 * v.n1 + v.r21) - v.n1 * v.r22 + v.m1 * (v.m3 * v.n3 + v.r33);
  return f;
}

RealVector ham_r12(const U4ChartPoint& x) {
  const Vars v(x);
  RealVector f = RealVector::Zero(kChartDim);
  f(n(3)) += v.r11;
  f(r(1, 3)) += -((-1 + v.m1 * v.m1) * v.n1 + 2 * v.m1 * v.r11);
  f(n(1)) += -v.r13;
  f(r(1, 1)) += (-1 + v.m1 * v.m1) * v.n3 + 2 * v.m1 * v.r13;
  f(m(3)) += -v.r22;
  f(r(3, 2)) += v.m2 * (-1 + v.n2 * v.n2) + 2 * v.n2 * v.r22;
  f(r(3, 3)) += -v.m3 * v.r11 + v.n3 * (v.m2 * v.n2 + v.r22) + v.n2 * v.r23 - v.m1 * (v.m3 * v.n1 + v.r31);
  f(m(2)) += v.r32;
  f(r(2, 1)) += v.m2 * v.r13 + v.m1 * (v.m2 * v.n3 + v.r23) - v.n2 * (v.m3 * v.n1 + v.r31) - v.n1 * v.r32;
  f(r(2, 2)) += -(v.m3 * (-1 + v.n2 * v.n2) + 2 * v.n2 * v.r32);
  f(r(2, 3)) += -(v.m2 * v.r11 + v.m1 * (v.m2 * v.n1 + v.r21) + v.n3 * (v.m3 * v.n2 + v.r32) + v.n2 * v.r33);
  f(r(3, 1)) += v.m3 * v.r13 + v.n2 * (v.m2 * v.n1 + v.r21) + v.n1 * v.r22 + v.m1 * (v.m3 * v.n3 + v.r33);
  return f;
}

RealVector ham_r21(const U4ChartPoint& x) {
  const Vars v(x);
  RealVector f = RealVector::Zero(kChartDim);
  f(m(3)) += v.r11;
  f(r(3, 1)) += -(v.m1 * (-1 + v.n1 * v.n1) + 2 * v.n1 * v.r11);
  f(n(3)) += -v.r22;
  f(r(2, 3)) += (-1 + v.m2 * v.m2) * v.n2 + 2 * v.m2 * v.r22;
  f(n(2)) += v.r23;
  f(r(2, 2)) += -((-1 + v.m2 * v.m2) * v.n3 + 2 * v.m2 * v.r23);
  f(m(1)) += -v.r31;
  f(r(1, 1)) += v.m3 * (-1 + v.n1 * v.n1) + 2 * v.n1 * v.r31;
  f(r(1, 2)) += -v.m2 * v.r13 - v.m1 * (v.m2 * v.n3 + v.r23) + v.n2 * (v.m3 * v.n1 + v.r31) + v.n1 * v.r32;
  f(r(3, 3)) += -v.n3 * (v.m1 * v.n1 + v.r11) - v.n1 * v.r13 + v.m3 * v.r22 + v.m2 * (v.m3 * v.n2 + v.r32);
  f(r(1, 3)) += v.m2 * v.r12 + v.m1 * (v.m2 * v.n2 + v.r22) + v.n3 * (v.m3 * v.n1 + v.r31) + v.n1 * v.r33;
  f(r(3, 2)) += -(v.n2 * (v.m1 * v.n1 + v.r11) + v.n1 * v.r12 + v.m3 * v.r23 + v.m2 * (v.m3 * v.n3 + v.r33));
  return f;
}

RealVector riem_y0(const U4ChartPoint& x) {
  RealVector f = x.to_vector();
  for (int k = 1; k <= 3; ++k)
    for (int j = 1; j <= 3; ++j) f(r(k, j)) -= x.n(j - 1) * x.m(k - 1);
  return f;
}

RealVector riem_m1(const U4ChartPoint& x) {
  const Vars v(x);
  RealVector f = RealVector::Zero(kChartDim);
  const double s = v.m1 * v.m1 + v.y0 - 1;
  f(m(1)) += v.y0;
  f(n(1)) += v.m1 * v.n1 + v.r11;
  f(n(2)) += v.m1 * v.n2 + v.r12;
  f(n(3)) += v.m1 * v.n3 + v.r13;
  f(r(1, 1)) += -(v.m1 * v.r11 + v.n1 * s);
  f(r(1, 2)) += -(v.m1 * v.r12 + v.n2 * s);
  f(r(1, 3)) += -(v.m1 * v.r13 + v.n3 * s);
  f(r(2, 1)) += -v.m2 * (v.m1 * v.n1 + v.r11);
  f(r(2, 2)) += -v.m2 * (v.m1 * v.n2 + v.r12);
  f(r(2, 3)) += -v.m2 * (v.m1 * v.n3 + v.r13);
  f(r(3, 1)) += -v.m3 * (v.m1 * v.n1 + v.r11);
  f(r(3, 2)) += -v.m3 * (v.m1 * v.n2 + v.r12);
  f(r(3, 3)) += -v.m3 * (v.m1 * v.n3 + v.r13);
  f(y0) += v.m1;
  return f;
}

RealVector riem_n1(const U4ChartPoint& x) {
  const Vars v(x);
  RealVector f = RealVector::Zero(kChartDim);
  const double s = v.n1 * v.n1 + v.y0 - 1;
  f(m(1)) += v.m1 * v.n1 + v.r11;
  f(m(2)) += v.m2 * v.n1 + v.r21;
  f(m(3)) += v.m3 * v.n1 + v.r31;
  f(n(1)) += v.y0;
  f(r(1, 1)) += -(v.n1 * v.r11 + v.m1 * s);
  f(r(1, 2)) += -v.n2 * (v.m1 * v.n1 + v.r11);
  f(r(1, 3)) += -v.n3 * (v.m1 * v.n1 + v.r11);
  f(r(2, 1)) += -(v.n1 * v.r21 + v.m2 * s);
  f(r(2, 2)) += -v.n2 * (v.m2 * v.n1 + v.r21);
  f(r(2, 3)) += -v.n3 * (v.m2 * v.n1 + v.r21);
  f(r(3, 1)) += -(v.n1 * v.r31 + v.m3 * s);
  f(r(3, 2)) += -v.n2 * (v.m3 * v.n1 + v.r31);
  f(r(3, 3)) += -v.n3 * (v.m3 * v.n1 + v.r31);
  f(y0) += v.n1;
  return f;
}

RealVector riem_r11(const U4ChartPoint& x) {
  const Vars v(x);
  RealVector f = RealVector::Zero(kChartDim);
  f(m(1)) += v.m1 * v.r11 + v.n1 * (v.m1 * v.m1 + v.y0 - 1);
  f(m(2)) += v.m1 * (v.m2 * v.n1 + v.r21);
  f(m(3)) += v.m1 * (v.m3 * v.n1 + v.r31);
  f(n(1)) += v.n1 * v.r11 + v.m1 * (v.n1 * v.n1 + v.y0 - 1);
  f(n(2)) += v.n1 * (v.m1 * v.n2 + v.r12);
  f(n(3)) += v.n1 * (v.m1 * v.n3 + v.r13);
  f(r(1, 1)) += -((2 * v.n1 * v.n1 + v.y0 - 2) * v.m1 * v.m1 + 2 * v.n1 * v.r11 * v.m1 +
                  v.n1 * v.n1 * (v.y0 - 2) + v.y0);
  f(r(1, 2)) += -(v.m1 * v.n2 * v.r11 + v.n1 * (v.m1 * v.r12 + v.n2 * (2 * v.m1 * v.m1 + v.y0 - 2)));
  f(r(1, 3)) += -(v.m1 * v.n3 * v.r11 + v.n1 * (v.m1 * v.r13 + v.n3 * (2 * v.m1 * v.m1 + v.y0 - 2)));
  f(r(2, 1)) += -(v.m2 * v.n1 * v.r11 + v.m1 * (v.n1 * v.r21 + v.m2 * (2 * v.n1 * v.n1 + v.y0 - 2)));
  f(r(2, 2)) += v.m3 * v.n3 - v.m2 * v.n1 * v.r12 - v.m1 * v.n2 * (2 * v.m2 * v.n1 + v.r21) + v.r33;
  f(r(2, 3)) += -(v.m3 * v.n2 + v.m2 * v.n1 * v.r13 + v.m1 * v.n3 * (2 * v.m2 * v.n1 + v.r21) + v.r32);
  f(r(3, 1)) += -(v.m3 * v.n1 * v.r11 + v.m1 * (v.n1 * v.r31 + v.m3 * (2 * v.n1 * v.n1 + v.y0 - 2)));
  f(r(3, 2)) += -(v.m2 * v.n3 + v.m3 * v.n1 * v.r12 + v.r23 + v.m1 * v.n2 * (2 * v.m3 * v.n1 + v.r31));
  f(r(3, 3)) += v.m2 * v.n2 - v.m3 * v.n1 * v.r13 + v.r22 - v.m1 * v.n3 * (2 * v.m3 * v.n1 + v.r31);
  f(y0) += v.m1 * v.n1 - v.r11;
  return f;
}

RealVector riem_r12(const U4ChartPoint& x) {
  const Vars v(x);
  RealVector f = RealVector::Zero(kChartDim);
  f(m(1)) += v.m1 * v.r12 + v.n2 * (v.m1 * v.m1 + v.y0 - 1);
  f(m(2)) += v.m1 * (v.m2 * v.n2 + v.r22);
  f(m(3)) += v.m1 * (v.m3 * v.n2 + v.r32);
  f(n(1)) += v.n2 * (v.m1 * v.n1 + v.r11);
  f(n(2)) += v.n2 * v.r12 + v.m1 * (v.n2 * v.n2 + v.y0 - 1);
  f(n(3)) += v.n2 * (v.m1 * v.n3 + v.r13);
  f(r(1, 1)) += -(v.m1 * v.n2 * v.r11 + v.n1 * (v.m1 * v.r12 + v.n2 * (2 * v.m1 * v.m1 + v.y0 - 2)));
  f(r(1, 2)) += -((2 * v.n2 * v.n2 + v.y0 - 2) * v.m1 * v.m1 + 2 * v.n2 * v.r12 * v.m1 +
                  v.n2 * v.n2 * (v.y0 - 2) + v.y0);
  f(r(1, 3)) += -(v.m1 * v.n3 * v.r12 + v.n2 * (v.m1 * v.r13 + v.n3 * (2 * v.m1 * v.m1 + v.y0 - 2)));
  f(r(2, 1)) += -(v.m3 * v.n3 + v.m2 * v.n2 * v.r11 + v.m1 * v.n1 * (2 * v.m2 * v.n2 + v.r22) + v.r33);
  f(r(2, 2)) += -(v.m2 * v.n2 * v.r12 + v.m1 * (v.n2 * v.r22 + v.m2 * (2 * v.n2 * v.n2 + v.y0 - 2)));
  f(r(2, 3)) += v.m3 * v.n1 - v.m2 * v.n2 * v.r13 - v.m1 * v.n3 * (2 * v.m2 * v.n2 + v.r22) + v.r31;
  f(r(3, 1)) += v.m2 * v.n3 - v.m3 * v.n2 * v.r11 + v.r23 - v.m1 * v.n1 * (2 * v.m3 * v.n2 + v.r32);
  f(r(3, 2)) += -(v.m3 * v.n2 * v.r12 + v.m1 * (v.n2 * v.r32 + v.m3 * (2 * v.n2 * v.n2 + v.y0 - 2)));
  f(r(3, 3)) += -(v.m2 * v.n1 + v.m3 * v.n2 * v.r13 + v.r21 + v.m1 * v.n3 * (2 * v.m3 * v.n2 + v.r32));
  f(y0) += v.m1 * v.n2 - v.r12;
  return f;
}

}  // namespace

const std::vector<PrintedField>& printed_fields() {
  static const std::vector<PrintedField> fields = {
      {"{m1,.}", m(1), true, ham_m1},
      {"{n1,.}", n(1), true, ham_n1},
      {"{r11,.}", r(1, 1), true, ham_r11},
      {"{r12,.}", r(1, 2), true, ham_r12},
      {"{r21,.}", r(2, 1), true, ham_r21},
      {"J_y0", y0, false, riem_y0},
      {"J_m1", m(1), false, riem_m1},
      {"J_n1", n(1), false, riem_n1},
      {"J_r11", r(1, 1), false, riem_r11},
      {"J_r12", r(1, 2), false, riem_r12},
  };
  return fields;
}

}  // namespace geoqm
