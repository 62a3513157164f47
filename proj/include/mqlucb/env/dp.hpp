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

#include "mqlucb/env/mdp.hpp"

namespace mqlucb {

/// Stagewise value tables from backward dynamic programming.
/// value(H, s) is the terminal zero.
struct ValueTables {
  int horizon = 0;
  int num_states = 0;
  int num_actions = 0;
  std::vector<double> v;  // (H+1) x S
  std::vector<double> q;  // H x S x A

  ValueTables(int horizon, int num_states, int num_actions);

  double value(int h, int s) const {
    return v[static_cast<std::size_t>(h * num_states + s)];
  }
  double& value(int h, int s) { return v[static_cast<std::size_t>(h * num_states + s)]; }
  double action_value(int h, int s, int a) const {
    return q[static_cast<std::size_t>((h * num_states + s) * num_actions + a)];
  }
  double& action_value(int h, int s, int a) {
    return q[static_cast<std::size_t>((h * num_states + s) * num_actions + a)];
  }
};

ValueTables optimal_values(const MdpSpec& mdp);

/// Values of a fixed (possibly stochastic) Markov policy.
ValueTables policy_value(const MdpSpec& mdp, const Policy& policy);

/// Greedy deterministic policy w.r.t. tabulated Q, lowest action on ties.
Policy greedy_policy(const ValueTables& tables);

/// Variance of V_{h+1}(s') under s' ~ P_h(.|s, a), with V taken from tables.
double next_state_variance(const MdpSpec& mdp, const ValueTables& tables, int h, int s, int a);

}  // namespace mqlucb
