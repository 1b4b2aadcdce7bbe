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

#include "geoqm/polar.hpp"

#include <cmath>
#include <limits>

#include "geoqm/spectral.hpp"

namespace geoqm {

Schrodinger1D::Schrodinger1D(GridAxis axis, std::function<double(double)> potential, double mass, double hbar)
    : axis_(axis), v_(axis.n), mass_(mass), hbar_(hbar) {
  if (axis.n < 4 || (axis.n & (axis.n - 1)) != 0)
    throw ValidationError("Schrodinger1D: point count must be a power of two");
  if (!(mass > 0.0) || !(hbar > 0.0)) throw ValidationError("Schrodinger1D: mass and hbar must be positive");
  for (Eigen::Index i = 0; i < axis.n; ++i) v_(i) = potential(axis.at(i));
}

Schrodinger1D Schrodinger1D::free(GridAxis axis, double mass, double hbar) {
  return {axis, [](double) { return 0.0; }, mass, hbar};
}

Schrodinger1D Schrodinger1D::harmonic(GridAxis axis, double omega, double mass, double hbar) {
  return {axis, [=](double q) { return 0.5 * mass * omega * omega * q * q; }, mass, hbar};
}

std::vector<WaveFunction1D> Schrodinger1D::evolve(const WaveFunction1D& psi0, double dt, int steps) const {
  if (psi0.axis().n != axis_.n || psi0.axis().min != axis_.min || psi0.axis().max != axis_.max)
    throw ValidationError("Schrodinger1D::evolve: wave function lives on a different axis");
  if (steps < 0) throw ValidationError("Schrodinger1D::evolve: negative step count");
  const Eigen::Index n = axis_.n;
  const RealVector k = wavenumbers(n, axis_.length());
  ComplexVector half_v(n), kinetic(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    half_v(i) = std::polar(1.0, -0.5 * v_(i) * dt / hbar_);
    kinetic(i) = std::polar(1.0, -hbar_ * k(i) * k(i) * dt / (2.0 * mass_)) / static_cast<double>(n);
  }
  std::vector<WaveFunction1D> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  out.push_back(psi0);
  ComplexVector psi = psi0.samples();
  for (int s = 0; s < steps; ++s) {
    psi = psi.cwiseProduct(half_v);
    psi = fft(fft(psi, FftDirection::forward).cwiseProduct(kinetic), FftDirection::backward);
    psi = psi.cwiseProduct(half_v);
    out.push_back(WaveFunction1D::normalized(axis_, psi));
  }
  return out;
}

PolarDiagnostics polar_diagnostics(const std::vector<WaveFunction1D>& frames, double dt, double mass, double hbar,
                                   double node_threshold) {
  if (frames.empty()) throw ValidationError("polar_diagnostics: no frames");
  if (!(dt > 0.0) || !(mass > 0.0) || !(hbar > 0.0))
    throw ValidationError("polar_diagnostics: dt, mass and hbar must be positive");
  const GridAxis axis = frames.front().axis();
  const Eigen::Index n = axis.n;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  PolarDiagnostics out;
  std::vector<RealVector> current(frames.size());

  for (std::size_t f = 0; f < frames.size(); ++f) {
    if (frames[f].axis().n != n) throw ValidationError("polar_diagnostics: frames use different axes");
    const ComplexVector& psi = frames[f].samples();
    const ComplexVector d1 = spectral_derivative(psi, axis.length(), 1);
    const ComplexVector d2 = spectral_derivative(psi, axis.length(), 2);
    PolarFrame fr;
    fr.t = static_cast<double>(f) * dt;
    fr.rho = psi.cwiseAbs2();
    fr.velocity = RealVector::Constant(n, nan);
    fr.quantum_potential = RealVector::Constant(n, nan);
    fr.masked.assign(static_cast<std::size_t>(n), false);
    current[f] = RealVector(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      current[f](i) = (hbar / mass) * (std::conj(psi(i)) * d1(i)).imag();
      if (std::abs(psi(i)) < node_threshold) {
        fr.masked[static_cast<std::size_t>(i)] = true;
        ++out.masked_points;
        continue;
      }
      const cplx l1 = d1(i) / psi(i);
      const cplx l2 = d2(i) / psi(i);
      fr.velocity(i) = (hbar / mass) * l1.imag();
      fr.quantum_potential(i) = -(hbar * hbar / (2.0 * mass)) * (l2.real() + l1.imag() * l1.imag());
    }
    out.frames.push_back(std::move(fr));
  }

  for (std::size_t f = 1; f + 1 < frames.size(); ++f) {
    const ComplexVector dj = spectral_derivative(ComplexVector(current[f].cast<cplx>()), axis.length(), 1);
    RealVector res(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      res(i) = (out.frames[f + 1].rho(i) - out.frames[f - 1].rho(i)) / (2.0 * dt) + dj(i).real();
      if (!out.frames[f].masked[static_cast<std::size_t>(i)])
        out.max_continuity_residual = std::max(out.max_continuity_residual, std::abs(res(i)));
    }
    out.frames[f].continuity_residual = std::move(res);
  }
  return out;
}

}  // namespace geoqm
