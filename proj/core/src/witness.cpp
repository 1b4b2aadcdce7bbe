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

#include "geoqm/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "geoqm/lie_dual.hpp"

namespace geoqm {

namespace {

constexpr double kInteriorFloor = 1e-8;

double entropy_of_spectrum(const RealVector& ev) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > 0.0) s -= ev(i) * std::log(ev(i));
  return s;
}

ComplexMatrix spin_flip(const ComplexMatrix& rho) {
  static const ComplexMatrix yy = kron(pauli(2), pauli(2));
  return yy * rho.conjugate() * yy;
}

double concurrence_of_matrix(const ComplexMatrix& rho) {
  const ComplexMatrix root = matrix_sqrt_psd(rho);
  const ComplexMatrix r = root * spin_flip(rho) * root;
  RealVector mu = eig_herm(HermitianOperator::hermitian_part(r)).values;
  // Eigenvalues below the rounding floor of r are exact zeros; the square
  // root would otherwise lift 1e-17 noise to 1e-9.
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, mu.cwiseAbs().maxCoeff());
  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i) lam[static_cast<std::size_t>(i)] = mu(i) > floor ? std::sqrt(mu(i)) : 0.0;
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double entropy_of_matrix(const ComplexMatrix& rho) {
  return entropy_of_spectrum(eig_herm(HermitianOperator::hermitian_part(rho)).values);
}

ComplexMatrix rho_t_matrix(const RhoTParams& p) {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(1, 1) = p.a;
  m(2, 2) = p.b;
  m(3, 3) = 1.0 - p.a - p.b;
  m(1, 2) = 0.5 * p.c * std::exp(kI * p.phi);
  m(2, 1) = std::conj(m(1, 2));
  return m;
}

}  // namespace

std::array<double, 4> rho_t_spectrum(const RhoTParams& p) {
  const double r = std::hypot(p.a - p.b, p.c);
  return {0.0, 1.0 - p.a - p.b, 0.5 * (p.a + p.b - r), 0.5 * (p.a + p.b + r)};
}

DensityState rho_t(const RhoTParams& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c) || !std::isfinite(p.phi))
    throw ValidationError("rho_t: non-finite parameter");
  if (p.a < 0.0 || p.b < 0.0 || p.a + p.b > 1.0) throw ValidationError("rho_t: require a, b >= 0 and a + b <= 1");
  if (p.c < 0.0 || p.c > 1.0) throw ValidationError("rho_t: require 0 <= c <= 1");
  const auto ev = rho_t_spectrum(p);
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (ev[i] < -kDensityTol) {
      std::ostringstream os;
      os << "rho_t: eigenvalue " << i << " = " << ev[i] << " is negative (need 4ab >= c^2)";
      throw ValidationError(os.str());
    }
  }
  return DensityState(rho_t_matrix(p));
}

double concurrence(const DensityState& rho) {
  if (rho.dim() != 4) throw ValidationError("concurrence: two-qubit state required");
  return concurrence_of_matrix(rho.matrix());
}

double von_neumann_entropy(const DensityState& rho) { return entropy_of_spectrum(rho.spectrum()); }

double pure_state_entropy(const StateVector& psi, BipartiteDims dims) {
  return von_neumann_entropy(partial_trace(DensityState::pure(psi), dims, Subsystem::second));
}

double wedge_norm(const std::array<double, 4>& u, const std::array<double, 4>& v) {
  double acc = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double minor = u[i] * v[j] - u[j] * v[i];
      acc += minor * minor;
    }
  }
  return std::sqrt(acc);
}

WitnessRecord witness_differentials(const RhoTParams& p) {
  const DensityState rho = rho_t(p);
  const auto ev = rho_t_spectrum(p);
  for (std::size_t i = 1; i < 4; ++i) {
    if (ev[i] < kInteriorFloor) {
      std::ostringstream os;
      os << "witness_differentials: eigenvalue " << ev[i] << " too close to the boundary";
      throw ValidationError(os.str());
    }
  }
  const double r = std::hypot(p.a - p.b, p.c);
  const double l1 = ev[1], lm = ev[2], lp = ev[3];
  // d lambda / d(a, b, c); sum over eigenvalues vanishes so the "+1" of
  // d(lambda log lambda) drops out.
  const double dl1[3] = {-1.0, -1.0, 0.0};
  const double dlp[3] = {0.5 * (1.0 + (p.a - p.b) / r), 0.5 * (1.0 - (p.a - p.b) / r), 0.5 * p.c / r};
  const double dlm[3] = {0.5 * (1.0 - (p.a - p.b) / r), 0.5 * (1.0 + (p.a - p.b) / r), -0.5 * p.c / r};

  WitnessRecord w;
  w.S = von_neumann_entropy(rho);
  w.C = concurrence(rho);
  for (int k = 0; k < 3; ++k)
    w.dS[static_cast<std::size_t>(k)] =
        -(std::log(l1) * dl1[k] + std::log(lp) * dlp[k] + std::log(lm) * dlm[k]);
  w.dS[3] = 0.0;
  w.dC = {0.0, 0.0, 1.0, 0.0};
  w.wedge_norm = wedge_norm(w.dS, w.dC);
  return w;
}

double poisson_bracket_SC(const RhoTParams& p, double step) {
  const DensityState rho = rho_t(p);
  static const LieBasis basis = LieBasis::gell_mann(4);
  const DualFunction s = [](const DualVector& xi) { return entropy_of_matrix(xi.matrix()); };
  const DualFunction c = [](const DualVector& xi) {
    // Perturbed points can leave the state space; project onto the PSD cone.
    const auto dec = eig_herm(HermitianOperator::hermitian_part(xi.matrix()));
    const RealVector clipped = dec.values.cwiseMax(0.0);
    const ComplexMatrix psd = dec.vectors * clipped.asDiagonal() * dec.vectors.adjoint();
    return concurrence_of_matrix(psd);
  };
  return lie_poisson(s, c, DualVector(rho.matrix()), basis, step);
}

double locus_closed_form(double a) {
  const double v = -4.0 + 16.0 * a - 12.0 * a * a;
  if (v < 0.0) throw ValidationError("locus_closed_form: a outside (1/3, 1)");
  return std::sqrt(v);
}

LocusPoint locus_on_slice(double a, double tol) {
  LocusPoint out{a, a, std::nullopt};
  if (!(a > 0.0) || a >= 0.5) return out;
  // Keep every nonstructural eigenvalue above the interior floor.
  const double hi_c = std::min(1.0, 2.0 * a - 4.0 * kInteriorFloor);
  // At c = 0 the slice point has a degenerate spectrum (R = 0).
  const double lo_c = 1e-6;
  auto minor = [a](double c) { return witness_differentials({a, a, c, 0.0}).dS[0]; };
  double lo = lo_c, hi = hi_c;
  double flo = minor(lo), fhi = minor(hi);
  if (flo == 0.0) {
    out.c = lo;
    return out;
  }
  if ((flo > 0.0) == (fhi > 0.0)) return out;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = minor(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  out.c = 0.5 * (lo + hi);
  return out;
}

std::vector<LocusPoint> independence_locus(const std::vector<double>& a_grid) {
  std::vector<LocusPoint> out;
  out.reserve(a_grid.size());
  for (double a : a_grid) out.push_back(locus_on_slice(a));
  return out;
}

}  // namespace geoqm
