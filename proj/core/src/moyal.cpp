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

#include "geoqm/moyal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "geoqm/spectral.hpp"

namespace geoqm {

namespace {

double binomial(int k, int j) {
  double b = 1.0;
  for (int i = 1; i <= j; ++i) b = b * (k - j + i) / i;
  return b;
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// d^i/dq^i of q^n: n!/(n-i)! q^{n-i}.
double falling(int n, int i) {
  double f = 1.0;
  for (int t = 0; t < i; ++t) f *= (n - t);
  return f;
}

struct Mode {
  Eigen::Index m;  // signed q index
  Eigen::Index n;  // signed p index
  cplx c;
};

Eigen::Index signed_index(Eigen::Index i, Eigen::Index n) { return (2 * i < n) ? i : i - n; }

// Coefficients c_mn of f = sum c_mn e^{i(k_m q + k_n p)} on the grid.
ComplexMatrix plane_wave_coefficients(const PhaseSpaceFunction& f) {
  const auto& g = f.grid;
  ComplexMatrix hat = fft2(f.values, FftDirection::forward);
  const RealVector kq = wavenumbers(g.q().n, g.q().length());
  const RealVector kp = wavenumbers(g.p().n, g.p().length());
  const double scale = 1.0 / static_cast<double>(g.q().n * g.p().n);
  for (Eigen::Index l = 0; l < g.p().n; ++l)
    for (Eigen::Index j = 0; j < g.q().n; ++j)
      hat(j, l) *= scale * std::polar(1.0, -(kq(j) * g.q().min + kp(l) * g.p().min));
  return hat;
}

ComplexMatrix from_plane_wave_coefficients(const PhaseSpaceGrid& g, ComplexMatrix c) {
  const RealVector kq = wavenumbers(g.q().n, g.q().length());
  const RealVector kp = wavenumbers(g.p().n, g.p().length());
  for (Eigen::Index l = 0; l < g.p().n; ++l)
    for (Eigen::Index j = 0; j < g.q().n; ++j) c(j, l) *= std::polar(1.0, kq(j) * g.q().min + kp(l) * g.p().min);
  return fft2(c, FftDirection::backward);
}

std::vector<Mode> significant_modes(const ComplexMatrix& c, double rel_cutoff) {
  const double top = c.cwiseAbs().maxCoeff();
  std::vector<Mode> out;
  if (top == 0.0) return out;
  for (Eigen::Index l = 0; l < c.cols(); ++l)
    for (Eigen::Index j = 0; j < c.rows(); ++j)
      if (std::abs(c(j, l)) > rel_cutoff * top)
        out.push_back({signed_index(j, c.rows()), signed_index(l, c.cols()), c(j, l)});
  return out;
}

bool same_grid(const PhaseSpaceGrid& a, const PhaseSpaceGrid& b) {
  return a.q().n == b.q().n && a.p().n == b.p().n && a.q().min == b.q().min && a.q().max == b.q().max &&
         a.p().min == b.p().min && a.p().max == b.p().max && a.hbar() == b.hbar();
}

ComplexMatrix grid_derivative(const PhaseSpaceFunction& f, int mq, int mp) {
  return spectral_derivative(f.values, f.grid.q().length(), f.grid.p().length(), mq, mp);
}

// Series with a polynomial factor; `poly_left` selects f * g versus g * f.
ComplexMatrix mixed_series(const PhasePolynomial& poly, const PhaseSpaceFunction& grid_fn, bool poly_left) {
  const auto& g = grid_fn.grid;
  const double hbar = g.hbar();
  ComplexMatrix out = ComplexMatrix::Zero(g.q().n, g.p().n);
  const int kmax = poly.degree();
  for (int k = 0; k <= kmax; ++k) {
    const cplx pref = std::pow(cplx(0.0, 0.5 * hbar), k) / factorial(k);
    for (int j = 0; j <= k; ++j) {
      const double w = binomial(k, j) * ((j % 2 == 0) ? 1.0 : -1.0);
      // Left factor: dq^{k-j} dp^j, right factor: dp^{k-j} dq^j.
      ComplexMatrix left, right;
      if (poly_left) {
        left = poly.derivative(k - j, j).sample(g);
        right = grid_derivative(grid_fn, j, k - j);
      } else {
        left = grid_derivative(grid_fn, k - j, j);
        right = poly.derivative(j, k - j).sample(g);
      }
      out += (pref * w) * left.cwiseProduct(right);
    }
  }
  return out;
}

}  // namespace

PhasePolynomial PhasePolynomial::constant(cplx c) { return monomial(0, 0, c); }

PhasePolynomial PhasePolynomial::monomial(int i, int j, cplx c) {
  if (i < 0 || j < 0) throw ValidationError("PhasePolynomial: negative exponent");
  PhasePolynomial out;
  out.add(i, j, c);
  return out;
}

PhasePolynomial PhasePolynomial::oscillator() { return monomial(2, 0, 0.5) + monomial(0, 2, 0.5); }

void PhasePolynomial::add(int i, int j, cplx c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

cplx PhasePolynomial::coefficient(int i, int j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? cplx(0.0) : it->second;
}

int PhasePolynomial::degree() const {
  int d = 0;
  for (const auto& [ij, c] : terms_) d = std::max(d, ij.first + ij.second);
  return d;
}

PhasePolynomial PhasePolynomial::derivative(int dq, int dp) const {
  PhasePolynomial out;
  for (const auto& [ij, c] : terms_) {
    const auto [i, j] = ij;
    if (i < dq || j < dp) continue;
    out.add(i - dq, j - dp, c * falling(i, dq) * falling(j, dp));
  }
  return out;
}

cplx PhasePolynomial::operator()(double q, double p) const {
  cplx acc = 0.0;
  for (const auto& [ij, c] : terms_) acc += c * std::pow(q, ij.first) * std::pow(p, ij.second);
  return acc;
}

ComplexMatrix PhasePolynomial::sample(const PhaseSpaceGrid& g) const {
  return PhaseSpaceFunction::sample(g, [this](double q, double p) { return (*this)(q, p); }).values;
}

double PhasePolynomial::distance(const PhasePolynomial& other) const {
  double d = 0.0;
  for (const auto& [ij, c] : (*this - other).terms_) d = std::max(d, std::abs(c));
  return d;
}

PhasePolynomial& PhasePolynomial::operator+=(const PhasePolynomial& o) {
  for (const auto& [ij, c] : o.terms_) add(ij.first, ij.second, c);
  return *this;
}

PhasePolynomial operator*(const PhasePolynomial& a, const PhasePolynomial& b) {
  PhasePolynomial out;
  for (const auto& [ia, ca] : a.terms_)
    for (const auto& [ib, cb] : b.terms_) out.add(ia.first + ib.first, ia.second + ib.second, ca * cb);
  return out;
}

PhasePolynomial operator*(const PhasePolynomial& a, cplx s) {
  PhasePolynomial out;
  for (const auto& [ij, c] : a.terms_) out.add(ij.first, ij.second, c * s);
  return out;
}

PhasePolynomial moyal_star(const PhasePolynomial& f, const PhasePolynomial& g, double hbar) {
  if (!(hbar > 0.0)) throw ValidationError("moyal_star: hbar must be positive");
  PhasePolynomial out;
  const int kmax = std::min(f.degree(), g.degree());
  for (int k = 0; k <= kmax; ++k) {
    const cplx pref = std::pow(cplx(0.0, 0.5 * hbar), k) / factorial(k);
    for (int j = 0; j <= k; ++j) {
      const double w = binomial(k, j) * ((j % 2 == 0) ? 1.0 : -1.0);
      out += f.derivative(k - j, j) * g.derivative(j, k - j) * (pref * w);
    }
  }
  return out;
}

ComplexMatrix moyal_star(const PhasePolynomial& f, const PhaseSpaceFunction& g) { return mixed_series(f, g, true); }

ComplexMatrix moyal_star(const PhaseSpaceFunction& f, const PhasePolynomial& g) { return mixed_series(g, f, false); }

MoyalResult moyal_star(const PhaseSpaceFunction& f, const PhaseSpaceFunction& g, double rel_cutoff) {
  if (!same_grid(f.grid, g.grid)) throw ValidationError("moyal_star: functions live on different grids");
  const auto& grid = f.grid;
  const Eigen::Index nq = grid.q().n, np = grid.p().n;
  const std::vector<Mode> fm = significant_modes(plane_wave_coefficients(f), rel_cutoff);
  const std::vector<Mode> gm = significant_modes(plane_wave_coefficients(g), rel_cutoff);
  MoyalResult res;
  res.modes_f = fm.size();
  res.modes_g = gm.size();
  if (static_cast<double>(fm.size()) * static_cast<double>(gm.size()) > 4e9)
    throw ValidationError("moyal_star: too many significant modes; raise rel_cutoff or coarsen the grid");

  const double dkq = 2.0 * std::numbers::pi / grid.q().length();
  const double dkp = 2.0 * std::numbers::pi / grid.p().length();
  const double half_hbar = 0.5 * grid.hbar();
  ComplexMatrix acc = ComplexMatrix::Zero(nq, np);
  bool near_nyquist = false;
  for (const auto& a : fm)
    if (4 * std::abs(a.m) > 3 * nq / 2 || 4 * std::abs(a.n) > 3 * np / 2) near_nyquist = true;
  for (const auto& b : gm)
    if (4 * std::abs(b.m) > 3 * nq / 2 || 4 * std::abs(b.n) > 3 * np / 2) near_nyquist = true;

  for (const auto& a : fm) {
    const double ka = a.m * dkq, kb = a.n * dkp;
    for (const auto& b : gm) {
      const double kc = b.m * dkq, kd = b.n * dkp;
      Eigen::Index m = a.m + b.m, n = a.n + b.n;
      if (2 * m >= nq || 2 * m < -nq || 2 * n >= np || 2 * n < -np) res.aliasing = true;
      m = ((m % nq) + nq) % nq;
      n = ((n % np) + np) % np;
      acc(m, n) += a.c * b.c * std::polar(1.0, half_hbar * (kb * kc - ka * kd));
    }
  }
  if (res.aliasing) res.warnings.emplace_back("product spectrum exceeds the grid band; result is aliased");
  if (near_nyquist) res.warnings.emplace_back("input spectrum has significant content near the Nyquist frequency");
  res.values = from_plane_wave_coefficients(grid, std::move(acc));
  return res;
}

ComplexMatrix moyal_series(const PhaseSpaceFunction& f, const PhaseSpaceFunction& g, int order) {
  if (!same_grid(f.grid, g.grid)) throw ValidationError("moyal_series: functions live on different grids");
  if (order < 0) throw ValidationError("moyal_series: negative order");
  const double hbar = f.grid.hbar();
  ComplexMatrix out = ComplexMatrix::Zero(f.values.rows(), f.values.cols());
  for (int k = 0; k <= order; ++k) {
    const cplx pref = std::pow(cplx(0.0, 0.5 * hbar), k) / factorial(k);
    for (int j = 0; j <= k; ++j) {
      const double w = binomial(k, j) * ((j % 2 == 0) ? 1.0 : -1.0);
      out += (pref * w) * grid_derivative(f, k - j, j).cwiseProduct(grid_derivative(g, j, k - j));
    }
  }
  return out;
}

ComplexMatrix poisson_bracket(const PhaseSpaceFunction& f, const PhaseSpaceFunction& g) {
  if (!same_grid(f.grid, g.grid)) throw ValidationError("poisson_bracket: functions live on different grids");
  return grid_derivative(f, 1, 0).cwiseProduct(grid_derivative(g, 0, 1)) -
         grid_derivative(f, 0, 1).cwiseProduct(grid_derivative(g, 1, 0));
}

double stationary_moyal_check(const PhaseSpaceFunction& rho, double energy) {
  const ComplexMatrix lhs = moyal_star(PhasePolynomial::oscillator(), rho);
  const double scale = rho.values.cwiseAbs().maxCoeff();
  if (!(scale > 0.0)) throw ValidationError("stationary_moyal_check: rho vanishes on the grid");
  return (lhs - energy * rho.values).cwiseAbs().maxCoeff() / scale;
}

SemiclassicalSweep semiclassical_sweep(const std::vector<double>& hbars) {
  if (hbars.size() < 2) throw ValidationError("semiclassical_sweep: need at least two hbar values");
  SemiclassicalSweep out;
  for (double hbar : hbars) {
    const PhaseSpaceGrid grid(GridAxis{-8.0, 8.0, 128}, GridAxis{-8.0, 8.0, 128}, hbar);
    const auto f = PhaseSpaceFunction::sample(grid, [](double q, double p) {
      return cplx(std::exp(-0.5 * ((q - 0.5) * (q - 0.5) + (p + 0.3) * (p + 0.3))));
    });
    const auto g = PhaseSpaceFunction::sample(grid, [](double q, double p) {
      return cplx(std::exp(-0.5 * ((q + 0.4) * (q + 0.4) + (p - 0.6) * (p - 0.6))));
    });
    const ComplexMatrix fg = moyal_star(f, g).values;
    const ComplexMatrix gf = moyal_star(g, f).values;
    const ComplexMatrix err = (fg - gf) / cplx(0.0, hbar) - poisson_bracket(f, g);
    out.points.push_back({hbar, err.cwiseAbs().maxCoeff()});
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(out.points.size());
  for (const auto& pt : out.points) {
    const double x = std::log(pt.hbar), y = std::log(pt.max_error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return out;
}

}  // namespace geoqm
