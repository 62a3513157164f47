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

#include "mqlucb/algo/switching.hpp"

#include <algorithm>

namespace mqlucb {

void SwitchState::accumulate(int h, double d2_frozen, double sigma_bar) {
  accumulators[static_cast<std::size_t>(h)] += d2_frozen / (sigma_bar * sigma_bar);
}

void SwitchState::reset(int k) {
  last_switch = k;
  ++switches;
  std::fill(accumulators.begin(), accumulators.end(), 0.0);
}

bool should_switch(const SwitchState& sw, const AlgoConfig& cfg, int k) {
  if (k == 1 || sw.switches == 0) return true;
  return std::any_of(sw.accumulators.begin(), sw.accumulators.end(),
                     [&](double s) { return s >= cfg.chi; });
}

}  // namespace mqlucb
