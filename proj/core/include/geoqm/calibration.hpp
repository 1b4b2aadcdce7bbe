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

#include <cstdint>
#include <string>
#include <vector>

namespace geoqm {

/// One scalar prefactor: the least-squares fit over random samples, the
/// value hard-coded in the library, and the worst residual of the identity
/// when evaluated with the hard-coded value.
struct CalibratedConstant {
  std::string name;
  double fitted = 0.0;
  double hard_coded = 0.0;
  double max_residual = 0.0;
};

/// Refits every calibrated prefactor from the coordinate oracle
/// (dimensions 2, 3, 4 in rotation).
std::vector<CalibratedConstant> run_calibration(std::uint64_t seed, int samples);

}  // namespace geoqm
