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

struct InvariantResult {
  std::string name;
  std::string module;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;  // exception text when the check threw
};

/// Names of the registered invariants, in execution order.
std::vector<std::string> invariant_names();

/// Runs the invariants whose module is in `modules` (all when empty). Each
/// check draws from its own Sampler seeded from `seed` and its index, so
/// results do not depend on which subset is selected.
std::vector<InvariantResult> run_invariants(std::uint64_t seed, const std::vector<std::string>& modules = {});

}  // namespace geoqm
