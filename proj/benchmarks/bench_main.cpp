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

#include <benchmark/benchmark.h>

#include "geoqm/discrete_weyl.hpp"
#include "geoqm/kahler.hpp"
#include "geoqm/lie_dual.hpp"
#include "geoqm/moyal.hpp"
#include "geoqm/phase_grid.hpp"
#include "geoqm/random.hpp"
#include "geoqm/u4chart.hpp"
#include "geoqm/witness.hpp"

using namespace geoqm;

static void BM_StructureConstants(benchmark::State& state) {
  const LieBasis basis = LieBasis::gell_mann(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(structure_constants(basis));
}
BENCHMARK(BM_StructureConstants)->Arg(2)->Arg(3)->Arg(4);

static void BM_StarProjective(benchmark::State& state) {
  Sampler s(1);
  const auto n = state.range(0);
  const auto a = s.hermitian(n), b = s.hermitian(n);
  const StateVector psi(s.gaussian_vector(n));
  for (auto _ : state) benchmark::DoNotOptimize(star_projective(a, b, psi));
}
BENCHMARK(BM_StarProjective)->Arg(2)->Arg(4)->Arg(16);

static void BM_ChartPoissonTensor(benchmark::State& state) {
  Sampler s(2);
  const U4ChartTensors tensors;
  const U4ChartPoint x = to_chart(s.hermitian(4));
  for (auto _ : state) benchmark::DoNotOptimize(tensors.poisson(x));
}
BENCHMARK(BM_ChartPoissonTensor);

static void BM_WitnessDifferentials(benchmark::State& state) {
  const RhoTParams p{0.3, 0.25, 0.2, 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(witness_differentials(p));
}
BENCHMARK(BM_WitnessDifferentials);

static void BM_WeylOperator(benchmark::State& state) {
  const DiscreteWeylSystem w(static_cast<int>(state.range(0)));
  long k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(w.weyl(k % 7, k % 5));
    ++k;
  }
}
BENCHMARK(BM_WeylOperator)->Arg(8)->Arg(64);

static void BM_Wigner(benchmark::State& state) {
  const auto n = state.range(0);
  const PhaseSpaceGrid grid(GridAxis{-8, 8, n}, GridAxis{-8, 8, n}, 1.0);
  const auto psi = WaveFunction1D::normalized(grid.q(), oscillator_eigenfunction(1, grid.q()));
  for (auto _ : state) benchmark::DoNotOptimize(wigner_function(psi, grid));
}
BENCHMARK(BM_Wigner)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_MoyalGrid(benchmark::State& state) {
  const auto n = state.range(0);
  const PhaseSpaceGrid grid(GridAxis{-8, 8, n}, GridAxis{-8, 8, n}, 0.5);
  auto gauss = [&](double q0, double p0) {
    return PhaseSpaceFunction::sample(grid, [=](double q, double p) {
      return cplx(std::exp(-((q - q0) * (q - q0) + (p - p0) * (p - p0)) / 2.0));
    });
  };
  const auto f = gauss(0.5, 0.0), g = gauss(-0.3, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(moyal_star(f, g));
}
BENCHMARK(BM_MoyalGrid)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
