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

#include "geoqm/phase_grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace geoqm {

namespace {

bool power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

void check_axis(const GridAxis& a, const char* name) {
  if (!power_of_two(a.n)) throw ValidationError(std::string(name) + " axis: point count must be a power of two");
  if (!(a.max > a.min) || !std::isfinite(a.min) || !std::isfinite(a.max))
    throw ValidationError(std::string(name) + " axis: require finite min < max");
}

constexpr double kEdgeDecay = 1e-8;

}  // namespace

RealVector GridAxis::values() const {
  RealVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = at(i);
  return v;
}

PhaseSpaceGrid::PhaseSpaceGrid(GridAxis q, GridAxis p, double hbar) : q_(q), p_(p), hbar_(hbar) {
  check_axis(q_, "q");
  check_axis(p_, "p");
  if (!(hbar_ > 0.0) || !std::isfinite(hbar_)) throw ValidationError("PhaseSpaceGrid: hbar must be positive");
}

PhaseSpaceGrid PhaseSpaceGrid::oscillator_default(double hbar) {
  if (!(hbar > 0.0)) throw ValidationError("PhaseSpaceGrid: hbar must be positive");
  const double half = 8.0 * std::sqrt(hbar);
  return {GridAxis{-half, half, 512}, GridAxis{-half, half, 512}, hbar};
}

WaveFunction1D::WaveFunction1D(GridAxis axis, ComplexVector samples) : axis_(axis), psi_(std::move(samples)) {
  check_axis(axis_, "q");
  if (psi_.size() != axis_.n) throw ValidationError("WaveFunction1D: sample count differs from the axis");
  if (!all_finite(psi_)) throw ValidationError("WaveFunction1D: non-finite sample");
  const double norm = psi_.squaredNorm() * axis_.spacing();
  if (std::abs(norm - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "WaveFunction1D: sum |psi|^2 dq = " << norm << ", expected 1";
    throw ValidationError(os.str());
  }
}

WaveFunction1D WaveFunction1D::normalized(GridAxis axis, const ComplexVector& samples) {
  const double norm = std::sqrt(samples.squaredNorm() * axis.spacing());
  if (!(norm > 0.0)) throw ValidationError("WaveFunction1D: zero wave function");
  return {axis, samples / norm};
}

PhaseSpaceFunction PhaseSpaceFunction::constant(const PhaseSpaceGrid& g, cplx c) {
  return {g, ComplexMatrix::Constant(g.q().n, g.p().n, c)};
}

ComplexVector oscillator_eigenfunction(int n, const GridAxis& axis, double hbar) {
  if (n < 0) throw ValidationError("oscillator_eigenfunction: n must be non-negative");
  if (!(hbar > 0.0)) throw ValidationError("oscillator_eigenfunction: hbar must be positive");
  const double norm0 = std::pow(1.0 / (std::numbers::pi * hbar), 0.25);
  ComplexVector out(axis.n);
  for (Eigen::Index i = 0; i < axis.n; ++i) {
    const double xi = axis.at(i) / std::sqrt(hbar);
    double prev = 0.0;
    double cur = norm0 * std::exp(-0.5 * xi * xi);
    for (int k = 0; k < n; ++k) {
      const double next = std::sqrt(2.0 / (k + 1.0)) * xi * cur - std::sqrt(k / (k + 1.0)) * prev;
      prev = cur;
      cur = next;
    }
    out(i) = cur;
  }
  return out;
}

ComplexVector gaussian_packet(const GridAxis& axis, double q0, double p0, double sigma, double hbar) {
  if (!(sigma > 0.0) || !(hbar > 0.0)) throw ValidationError("gaussian_packet: sigma and hbar must be positive");
  const double norm = std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25);
  ComplexVector out(axis.n);
  for (Eigen::Index i = 0; i < axis.n; ++i) {
    const double q = axis.at(i);
    out(i) = norm * std::exp(cplx(-(q - q0) * (q - q0) / (4.0 * sigma * sigma), p0 * q / hbar));
  }
  return out;
}

WignerResult wigner_function(const WaveFunction1D& psi, const PhaseSpaceGrid& grid) {
  const GridAxis& qa = psi.axis();
  if (qa.n != grid.q().n || std::abs(qa.min - grid.q().min) > 1e-12 || std::abs(qa.max - grid.q().max) > 1e-12)
    throw ValidationError("wigner_function: wave-function axis differs from the grid q axis");
  WignerResult out{grid, RealMatrix(), {}};
  const auto& v = psi.samples();
  const Eigen::Index n = qa.n;
  const Eigen::Index edge = std::max<Eigen::Index>(1, n / 64);
  double edge_max = 0.0;
  for (Eigen::Index i = 0; i < edge; ++i) edge_max = std::max({edge_max, std::abs(v(i)), std::abs(v(n - 1 - i))});
  if (edge_max > kEdgeDecay) {
    std::ostringstream os;
    os << "wave function reaches " << edge_max << " at the grid edge (> " << kEdgeDecay << ")";
    out.warnings.push_back(os.str());
  }

  // Terms k and -k are complex conjugates, so W = 2 dq Re sum_k c_k e^{..} g_k
  // with c_0 = 1 and c_k = 2.
  const Eigen::Index kmax = n / 2 + 1;
  ComplexMatrix g = ComplexMatrix::Zero(n, kmax);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < kmax; ++k) {
      if (j + k >= n || j - k < 0) break;
      g(j, k) = (k == 0 ? 1.0 : 2.0) * v(j + k) * std::conj(v(j - k));
    }
  }
  const double dq = qa.spacing();
  const Eigen::Index np = grid.p().n;
  ComplexMatrix e(kmax, np);
  for (Eigen::Index l = 0; l < np; ++l)
    for (Eigen::Index k = 0; k < kmax; ++k)
      e(k, l) = std::polar(1.0, -grid.p().at(l) * 2.0 * static_cast<double>(k) * dq / grid.hbar());
  out.w = (2.0 * dq) * (g * e).real();
  return out;
}

RealVector q_marginal(const WignerResult& w) {
  const double scale = w.grid.p().spacing() / (2.0 * std::numbers::pi * w.grid.hbar());
  return w.w.rowwise().sum() * scale;
}

RealVector p_marginal(const WignerResult& w) {
  const double scale = w.grid.q().spacing() / (2.0 * std::numbers::pi * w.grid.hbar());
  return w.w.colwise().sum().transpose() * scale;
}

double wigner_normalization(const WignerResult& w) {
  return w.w.sum() * w.grid.q().spacing() * w.grid.p().spacing() / (2.0 * std::numbers::pi * w.grid.hbar());
}

double wigner_overlap(const WignerResult& a, const WignerResult& b) {
  if (a.w.rows() != b.w.rows() || a.w.cols() != b.w.cols())
    throw ValidationError("wigner_overlap: grids differ");
  return a.w.cwiseProduct(b.w).sum() * a.grid.q().spacing() * a.grid.p().spacing() /
         (2.0 * std::numbers::pi * a.grid.hbar());
}

ComplexVector momentum_wavefunction(const WaveFunction1D& psi, const GridAxis& p_axis, double hbar) {
  const auto& qa = psi.axis();
  ComplexVector out = ComplexVector::Zero(p_axis.n);
  const double pref = qa.spacing() / std::sqrt(2.0 * std::numbers::pi * hbar);
  for (Eigen::Index l = 0; l < p_axis.n; ++l) {
    cplx acc = 0.0;
    for (Eigen::Index j = 0; j < qa.n; ++j) acc += std::polar(1.0, -p_axis.at(l) * qa.at(j) / hbar) * psi.samples()(j);
    out(l) = pref * acc;
  }
  return out;
}

PhaseSpaceFunction oscillator_wigner(int n, const PhaseSpaceGrid& grid) {
  if (n < 0) throw ValidationError("oscillator_wigner: n must be non-negative");
  const double hbar = grid.hbar();
  return PhaseSpaceFunction::sample(grid, [n, hbar](double q, double p) -> cplx {
    const double x = 2.0 * (q * q + p * p) / hbar;
    // Laguerre recursion (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}.
    double prev = 1.0, cur = 1.0 - x;
    double ln = (n == 0) ? 1.0 : cur;
    for (int k = 1; k < n; ++k) {
      const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
      prev = cur;
      cur = next;
      ln = cur;
    }
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return 2.0 * sign * ln * std::exp(-0.5 * x);
  });
}

}  // namespace geoqm
