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

#include <functional>
#include <vector>

#include "geoqm/phase_grid.hpp"

namespace geoqm {

/// i hbar psi_t = -hbar^2/(2m) psi'' + V psi on a periodic grid, advanced by
/// Strang split-step Fourier steps.
class Schrodinger1D {
 public:
  Schrodinger1D(GridAxis axis, std::function<double(double)> potential, double mass = 1.0, double hbar = 1.0);

  static Schrodinger1D free(GridAxis axis, double mass = 1.0, double hbar = 1.0);
  static Schrodinger1D harmonic(GridAxis axis, double omega = 1.0, double mass = 1.0, double hbar = 1.0);

  /// Returns steps + 1 frames, the first being psi0.
  [[nodiscard]] std::vector<WaveFunction1D> evolve(const WaveFunction1D& psi0, double dt, int steps) const;

  [[nodiscard]] const GridAxis& axis() const noexcept { return axis_; }
  [[nodiscard]] double mass() const noexcept { return mass_; }
  [[nodiscard]] double hbar() const noexcept { return hbar_; }

 private:
  GridAxis axis_;
  RealVector v_;
  double mass_;
  double hbar_;
};

/// psi = sqrt(rho) e^{i S / hbar} read off pointwise.
struct PolarFrame {
  double t = 0.0;
  RealVector rho;
  RealVector velocity;             // S'/m = (hbar/m) Im(psi'/psi)
  RealVector quantum_potential;    // -(hbar^2 / 2m) R''/R
  RealVector continuity_residual;  // rho_t + (rho v)'; empty on the first and last frame
  std::vector<bool> masked;        // |psi| below the node threshold
};

struct PolarDiagnostics {
  std::vector<PolarFrame> frames;
  double max_continuity_residual = 0.0;
  std::size_t masked_points = 0;  // summed over frames
};

/// Diagnostics for equally spaced frames. rho_t uses central differences in
/// time, the current (hbar/m) Im(psi* psi') spectral derivatives in q.
/// Velocity and quantum potential are NaN at masked points.
PolarDiagnostics polar_diagnostics(const std::vector<WaveFunction1D>& frames, double dt, double mass = 1.0,
                                   double hbar = 1.0, double node_threshold = 1e-8);

}  // namespace geoqm
