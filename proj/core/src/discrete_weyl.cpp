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

#include "geoqm/discrete_weyl.hpp"

#include <cmath>
#include <numbers>

namespace geoqm {

namespace {

long mod(long v, long n) {
  const long r = v % n;
  return r < 0 ? r + n : r;
}

}  // namespace

DiscreteWeylSystem::DiscreteWeylSystem(int n) : n_(n) {
  if (n < 1) throw ValidationError("DiscreteWeylSystem: N must be positive");
  shift_ = ComplexMatrix::Zero(n, n);
  clock_ = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    shift_((k + 1) % n, k) = 1.0;
    clock_(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
  }
}

ComplexMatrix DiscreteWeylSystem::weyl(long x, long a) const {
  // X^x Z^{-a} is a phased permutation: column k maps to row k + x with
  // phase omega^{-a k}. Exponents are reduced mod 2N to keep angles small.
  const long two_n = 2L * n_;
  const double base = std::numbers::pi / n_;
  ComplexMatrix w = ComplexMatrix::Zero(n_, n_);
  const long global = mod(-(mod(x, two_n) * mod(a, two_n)), two_n);
  for (long k = 0; k < n_; ++k) {
    const long e = mod(global - 2L * mod(a, n_) * k, two_n);
    w(mod(k + x, n_), k) = std::polar(1.0, base * static_cast<double>(e));
  }
  return w;
}

cplx DiscreteWeylSystem::cocycle(long x1, long a1, long x2, long a2) const {
  const long two_n = 2L * n_;
  const long w = mod(mod(x1, two_n) * mod(a2, two_n) - mod(x2, two_n) * mod(a1, two_n), two_n);
  return std::polar(1.0, std::numbers::pi * static_cast<double>(w) / n_);
}

ComplexMatrix DiscreteWeylSystem::quantize(const ComplexMatrix& f) const {
  if (f.rows() != n_ || f.cols() != n_) throw ValidationError("quantize: function must be N x N");
  ComplexMatrix out = ComplexMatrix::Zero(n_, n_);
  for (int x = 0; x < n_; ++x)
    for (int a = 0; a < n_; ++a)
      if (f(x, a) != 0.0) out += f(x, a) * weyl(x, a).adjoint();
  return out / static_cast<double>(n_);
}

ComplexMatrix DiscreteWeylSystem::symbol(const ComplexMatrix& a) const {
  if (a.rows() != n_ || a.cols() != n_) throw ValidationError("symbol: operator must be N x N");
  ComplexMatrix f(n_, n_);
  for (int x = 0; x < n_; ++x)
    for (int al = 0; al < n_; ++al) f(x, al) = (a * weyl(x, al)).trace();
  return f;
}

}  // namespace geoqm
