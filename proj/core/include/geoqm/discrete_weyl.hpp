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

#include "geoqm/linops.hpp"

namespace geoqm {

/// Clock and shift on C^N, realised on the integer lift of Z_N x Z_N:
/// W(x, a) = e^{-i pi x a / N} X^x Z^{-a}, so that
/// W(v1) W(v2) = e^{i pi w(v1, v2) / N} W(v1 + v2), w = x1 a2 - x2 a1,
/// holds exactly for all integer v1, v2.
class DiscreteWeylSystem {
 public:
  explicit DiscreteWeylSystem(int n);

  [[nodiscard]] int n() const noexcept { return n_; }
  /// X|k> = |k+1 mod N>
  [[nodiscard]] const ComplexMatrix& shift() const noexcept { return shift_; }
  /// Z = diag(omega^k), omega = e^{2 pi i / N}
  [[nodiscard]] const ComplexMatrix& clock() const noexcept { return clock_; }

  [[nodiscard]] ComplexMatrix weyl(long x, long a) const;
  /// e^{i pi w(v1, v2) / N}
  [[nodiscard]] cplx cocycle(long x1, long a1, long x2, long a2) const;

  /// f^ = (1/N) sum_v f(v) W(v)^dagger over v in [0,N)^2; f(x, a) at (x, a).
  [[nodiscard]] ComplexMatrix quantize(const ComplexMatrix& f) const;
  /// f_A(v) = Tr(A W(v)) on [0,N)^2.
  [[nodiscard]] ComplexMatrix symbol(const ComplexMatrix& a) const;

 private:
  int n_;
  ComplexMatrix shift_;
  ComplexMatrix clock_;
};

}  // namespace geoqm
