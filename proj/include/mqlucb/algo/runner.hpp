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

#include <optional>

#include "mqlucb/algo/agent.hpp"
#include "mqlucb/algo/metrics.hpp"
#include "mqlucb/env/mdp.hpp"

namespace mqlucb {

/// Runs K episodes. Regret of episode k is V*_1(s_1^k) - V^{pi^k}_1(s_1^k)
/// from exact dynamic programming. With a budget, at most `budget` plan calls
/// are granted; afterwards the last policy plays on.
RunMetrics run_agent(const MdpSpec& mdp, Agent& agent, int num_episodes, Rng& rng,
                     std::optional<int> budget = std::nullopt);

RunMetrics run_budget_limited(const MdpSpec& mdp, Agent& agent, int budget, int num_episodes,
                              Rng& rng);

}  // namespace mqlucb
