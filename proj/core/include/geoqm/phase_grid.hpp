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

#include <string>
#include <vector>

#include "geoqm/linops.hpp"

namespace geoqm {

/// Uniform periodic sampling of [min, max): n points, max excluded.
struct GridAxis {
  double min = -8.0;
  double max = 8.0;
  Eigen::Index n = 512;

  [[nodiscard]] double spacing() const { return (max - min) / static_cast<double>(n); }
  [[nodiscard]] double length() const { return max - min; }
  [[nodiscard]] double at(Eigen::Index i) const { return min + static_cast<double>(i) * spacing(); }
  [[nodiscard]] RealVector values() const;
};

/// (q, p) sampling plus the hbar the phase-space calculus uses.
class PhaseSpaceGrid {
 public:
  /// Point counts must be powers of two; hbar > 0.
  PhaseSpaceGrid(GridAxis q, GridAxis p, double hbar);
  /// 512 x 512 on [-8 sqrt(hbar), 8 sqrt(hbar)) in both directions.
  static PhaseSpaceGrid oscillator_default(double hbar = 1.0);

  [[nodiscard]] const GridAxis& q() const noexcept { return q_; }
  [[nodiscard]] const GridAxis& p() const noexcept { return p_; }
  [[nodiscard]] double hbar() const noexcept { return hbar_; }
  [[nodiscard]] PhaseSpaceGrid with_hbar(double hbar) const { return {q_, p_, hbar}; }

 private:
  GridAxis q_;
  GridAxis p_;
  double hbar_;
};

/// Samples of psi on a q axis with sum |psi|^2 dq = 1 (checked to 1e-10).
class WaveFunction1D {
 public:
  WaveFunction1D(GridAxis axis, ComplexVector samples);
  static WaveFunction1D normalized(GridAxis axis, const ComplexVector& samples);

  [[nodiscard]] const GridAxis& axis() const noexcept { return axis_; }
  [[nodiscard]] const ComplexVector& samples() const noexcept { return psi_; }

 private:
  GridAxis axis_;
  ComplexVector psi_;
};

/// Complex function sampled on a phase-space grid; rows index q, columns p.
struct PhaseSpaceFunction {
  PhaseSpaceGrid grid;
  ComplexMatrix values;

  static PhaseSpaceFunction constant(const PhaseSpaceGrid& g, cplx c);
  template <class F>
  static PhaseSpaceFunction sample(const PhaseSpaceGrid& g, F f) {
    ComplexMatrix v(g.q().n, g.p().n);
    for (Eigen::Index l = 0; l < g.p().n; ++l)
      for (Eigen::Index j = 0; j < g.q().n; ++j) v(j, l) = f(g.q().at(j), g.p().at(l));
    return {g, std::move(v)};
  }
};

/// Normalised harmonic-oscillator eigenfunction (m = omega = 1).
ComplexVector oscillator_eigenfunction(int n, const GridAxis& axis, double hbar = 1.0);
/// (2 pi s^2)^{-1/4} exp(-(q - q0)^2 / (4 s^2) + i p0 q / hbar)
ComplexVector gaussian_packet(const GridAxis& axis, double q0, double p0, double sigma, double hbar = 1.0);

struct WignerResult {
  PhaseSpaceGrid grid;
  RealMatrix w;  // rows q, columns p
  std::vector<std::string> warnings;
};

/// W(q, p) = int dxi e^{-i p xi / hbar} psi(q + xi/2) psi*(q - xi/2), with
/// the integral a Riemann sum over xi = 2k dq. Normalised so that
/// int int W dq dp / (2 pi hbar) = 1. The q axes of psi and grid must agree.
WignerResult wigner_function(const WaveFunction1D& psi, const PhaseSpaceGrid& grid);

/// int W dp / (2 pi hbar) and int W dq / (2 pi hbar).
RealVector q_marginal(const WignerResult& w);
RealVector p_marginal(const WignerResult& w);
double wigner_normalization(const WignerResult& w);
/// int int W1 W2 dq dp / (2 pi hbar), equal to Tr(rho1 rho2).
double wigner_overlap(const WignerResult& a, const WignerResult& b);

/// psi~(p) = (2 pi hbar)^{-1/2} sum_q e^{-i p q / hbar} psi(q) dq on a p axis.
ComplexVector momentum_wavefunction(const WaveFunction1D& psi, const GridAxis& p_axis, double hbar);

/// Closed-form oscillator Wigner functions 2 (-1)^n L_n(2 r^2/hbar) e^{-r^2/hbar}.
PhaseSpaceFunction oscillator_wigner(int n, const PhaseSpaceGrid& grid);

}  // namespace geoqm
