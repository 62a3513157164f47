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

#include <utility>
#include <vector>

#include "mqlucb/env/mdp.hpp"

namespace mqlucb {

/// Switching-cost lower-bound family: d/4 disconnected two-state sub-MDPs,
/// each with a hidden action sequence that alone earns reward 1.
///
/// Sub-MDP i owns flattened states 2i (start) and 2i+1 (absorbing). All
/// sub-MDPs share the action set {0, 1}, so |S||A| = d. Episodes are split
/// into d/4 equal epochs; epoch i always starts in state 2i.
struct HardInstance {
  int sub_count = 0;
  /// special_actions[i][h] is the action that keeps sub-MDP i on track at h.
  std::vector<std::vector<int>> special_actions;
  /// Inclusive 1-based episode ranges, one per sub-MDP.
  std::vector<std::pair<int, int>> epochs;
  MdpSpec mdp;

  static int start_state(int sub) { return 2 * sub; }
  static int absorbing_state(int sub) { return 2 * sub + 1; }
};

/// Throws std::invalid_argument unless d >= 4, d % 4 == 0, H >= 1 and K is a
/// positive multiple of d/4.
HardInstance make_hard_instance(int d, int horizon, int num_episodes, Rng& rng);

}  // namespace mqlucb
