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

#include <array>
#include <optional>
#include <vector>

#include "geoqm/linops.hpp"

namespace geoqm {

/// Chart (a, b, c, phi) on the rho_t family.
struct RhoTParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double phi = 0.0;
};

/// Basis |00>, |01>, |10>, |11>: diag(0, a, b, 1-a-b) with
/// rho(01,10) = c e^{i phi} / 2. Rejects parameters outside the ranges or
/// with a negative eigenvalue, naming the eigenvalue.
DensityState rho_t(const RhoTParams& p);
/// Closed-form spectrum {0, 1-a-b, (a+b-R)/2, (a+b+R)/2}, R = sqrt((a-b)^2 + c^2).
std::array<double, 4> rho_t_spectrum(const RhoTParams& p);

/// Wootters concurrence from the spectrum of sqrt(rho) rho~ sqrt(rho).
double concurrence(const DensityState& rho);
/// -Tr rho log rho in nats, eigenvalues clipped at 0.
double von_neumann_entropy(const DensityState& rho);
/// Entropy of the reduced state of a bipartite pure state.
double pure_state_entropy(const StateVector& psi, BipartiteDims dims = {});

struct WitnessRecord {
  double S = 0.0;
  double C = 0.0;
  std::array<double, 4> dS{};  // (d/da, d/db, d/dc, d/dphi)
  std::array<double, 4> dC{};
  double wedge_norm = 0.0;
};

/// Euclidean norm of all 2x2 minors of the stacked differentials.
double wedge_norm(const std::array<double, 4>& u, const std::array<double, 4>& v);

/// Analytic differentials; throws if any nonstructural eigenvalue is
/// below 1e-8 (log not differentiable there).
WitnessRecord witness_differentials(const RhoTParams& p);

/// {S, C}(rho_t) = Tr(rho (-i)[dS, dC]) with central-difference gradients of
/// S and C on u*(4).
double poisson_bracket_SC(const RhoTParams& p, double step = 1e-5);

struct LocusPoint {
  double a = 0.0;
  double b = 0.0;
  std::optional<double> c;  // empty when the slice has no zero
};

/// Zero of dS ^ dC on the slice b = a, by bisection on dS/da along c.
LocusPoint locus_on_slice(double a, double tol = 1e-13);
std::vector<LocusPoint> independence_locus(const std::vector<double>& a_grid);

/// c(a) = sqrt(-4 + 16 a - 12 a^2) for a in (1/3, 1/2).
double locus_closed_form(double a);

}  // namespace geoqm
