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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "geoqm/phase_grid.hpp"

namespace geoqm {

/// Polynomial sum c_ij q^i p^j with complex coefficients.
class PhasePolynomial {
 public:
  PhasePolynomial() = default;
  static PhasePolynomial constant(cplx c);
  static PhasePolynomial monomial(int i, int j, cplx c = 1.0);
  static PhasePolynomial q() { return monomial(1, 0); }
  static PhasePolynomial p() { return monomial(0, 1); }
  /// (q^2 + p^2) / 2
  static PhasePolynomial oscillator();

  [[nodiscard]] const std::map<std::pair<int, int>, cplx>& terms() const noexcept { return terms_; }
  [[nodiscard]] cplx coefficient(int i, int j) const;
  [[nodiscard]] int degree() const;
  [[nodiscard]] PhasePolynomial derivative(int dq, int dp) const;
  [[nodiscard]] cplx operator()(double q, double p) const;
  [[nodiscard]] ComplexMatrix sample(const PhaseSpaceGrid& g) const;
  /// Largest coefficient difference.
  [[nodiscard]] double distance(const PhasePolynomial& other) const;

  PhasePolynomial& operator+=(const PhasePolynomial& o);
  friend PhasePolynomial operator+(PhasePolynomial a, const PhasePolynomial& b) { return a += b; }
  friend PhasePolynomial operator-(const PhasePolynomial& a, const PhasePolynomial& b) { return a + b * cplx(-1.0); }
  friend PhasePolynomial operator*(const PhasePolynomial& a, const PhasePolynomial& b);
  friend PhasePolynomial operator*(const PhasePolynomial& a, cplx s);

 private:
  void add(int i, int j, cplx c);
  std::map<std::pair<int, int>, cplx> terms_;
};

/// Exact Moyal product of polynomials; the bidifferential series
/// sum_k (i hbar/2)^k / k! sum_j C(k,j) (-1)^j (dq^{k-j} dp^j f)(dp^{k-j} dq^j g)
/// terminates at k = min(deg f, deg g).
PhasePolynomial moyal_star(const PhasePolynomial& f, const PhasePolynomial& g, double hbar);

/// Same series with a polynomial on one side and spectral derivatives of a
/// decaying grid function on the other. Exact up to grid resolution.
ComplexMatrix moyal_star(const PhasePolynomial& f, const PhaseSpaceFunction& g);
ComplexMatrix moyal_star(const PhaseSpaceFunction& f, const PhasePolynomial& g);

struct MoyalResult {
  ComplexMatrix values;
  std::size_t modes_f = 0;
  std::size_t modes_g = 0;
  bool aliasing = false;
  std::vector<std::string> warnings;
};

/// Grid Moyal product in the double-Fourier domain. Each pair of plane waves
/// multiplies exactly, e^{i(aq+bp)} * e^{i(cq+dp)} = e^{(i hbar/2)(bc - ad)}
/// e^{i((a+c)q + (b+d)p)}, so the result is exact for band-limited inputs.
/// Modes below rel_cutoff of the largest coefficient are dropped; sums that
/// leave the band raise the aliasing flag.
MoyalResult moyal_star(const PhaseSpaceFunction& f, const PhaseSpaceFunction& g, double rel_cutoff = 1e-15);

/// Bidifferential series truncated after `order`, spectral derivatives.
ComplexMatrix moyal_series(const PhaseSpaceFunction& f, const PhaseSpaceFunction& g, int order);

/// {f, g} = f_q g_p - f_p g_q, spectral derivatives.
ComplexMatrix poisson_bracket(const PhaseSpaceFunction& f, const PhaseSpaceFunction& g);

/// |H * rho - E rho|_inf / |rho|_inf with H = (q^2 + p^2)/2.
double stationary_moyal_check(const PhaseSpaceFunction& rho, double energy);

struct SemiclassicalPoint {
  double hbar = 0.0;
  double max_error = 0.0;  // max |(f*g - g*f)/(i hbar) - {f, g}|
};

struct SemiclassicalSweep {
  std::vector<SemiclassicalPoint> points;
  double slope = 0.0;  // least-squares slope of log error against log hbar
};

/// Two displaced unit Gaussians on a fixed 128^2 grid over [-8, 8)^2.
SemiclassicalSweep semiclassical_sweep(const std::vector<double>& hbars);

}  // namespace geoqm
