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

#include "mqlucb/env/mdp.hpp"

namespace mqlucb {

/// Two-stage, two-state deterministic chain. Action 0 moves s0 -> s1 at the
/// first stage, action 1 self-loops, s1 is absorbing. Only r_2(s1, a0) = 1.
MdpSpec make_chain2();

/// Single-stage-pair MDP whose first transition from state 0 under any action
/// lands in state 1 with probability p (else state 0). Zero rewards.
MdpSpec make_two_outcome(double p);

struct RandomMdpOptions {
  int num_states = 4;
  int num_actions = 3;
  int horizon = 3;
  /// Dirichlet concentration of every transition row.
  double concentration = 1.0;
  /// Rewards are drawn uniformly in [0, reward_scale]; <= 0 means 1/H.
  double reward_scale = 0.0;
  InitialStateSchedule initial_states = InitialStateSchedule::fixed(0);
};

/// Random dense MDP satisfying the total-reward bound by construction.
MdpSpec make_random_mdp(const RandomMdpOptions& options, Rng& rng);

}  // namespace mqlucb
