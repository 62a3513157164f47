// Copyright 2026 The mqlucb Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "mqlucb/algo/config.hpp"

namespace mqlucb {

/// Rare-switching bookkeeping. accumulators[h] holds
///   S_h = sum_{i >= k_last} D_frozen^2(z_{i,h}) / sigma_bar_{i,h}^2.
struct SwitchState {
  int last_switch = 0;  // k_last, 0 before the first plan
  int switches = 0;     // l_k
  std::vector<double> accumulators;

  explicit SwitchState(int horizon) : accumulators(static_cast<std::size_t>(horizon), 0.0) {}

  void accumulate(int h, double d2_frozen, double sigma_bar);
  /// Called after a plan at episode k.
  void reset(int k);
};

/// True before the first plan (k = 1 in an unconstrained run) or when some
/// stage accumulator has reached chi.
bool should_switch(const SwitchState& sw, const AlgoConfig& cfg, int k);

}  // namespace mqlucb
