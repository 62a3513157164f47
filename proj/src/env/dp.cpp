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

#include "mqlucb/env/dp.hpp"

#include <algorithm>
#include <stdexcept>

namespace mqlucb {

ValueTables::ValueTables(int horizon_, int num_states_, int num_actions_)
    : horizon(horizon_),
      num_states(num_states_),
      num_actions(num_actions_),
      v(static_cast<std::size_t>((horizon_ + 1) * num_states_), 0.0),
      q(static_cast<std::size_t>(horizon_ * num_states_ * num_actions_), 0.0) {}

namespace {

double expected_next(const MdpSpec& mdp, const ValueTables& t, int h, int s, int a) {
  const auto row = mdp.transition_row(h, s, a);
  double acc = 0.0;
  for (int n = 0; n < mdp.num_states(); ++n) acc += row[static_cast<std::size_t>(n)] * t.value(h + 1, n);
  return acc;
}

}  // namespace

ValueTables optimal_values(const MdpSpec& mdp) {
  ValueTables t(mdp.horizon(), mdp.num_states(), mdp.num_actions());
  for (int h = mdp.horizon() - 1; h >= 0; --h) {
    for (int s = 0; s < mdp.num_states(); ++s) {
      double best = 0.0;
      for (int a = 0; a < mdp.num_actions(); ++a) {
        const double q = mdp.reward(h, s, a) + expected_next(mdp, t, h, s, a);
        t.action_value(h, s, a) = q;
        best = (a == 0) ? q : std::max(best, q);
      }
      t.value(h, s) = best;
    }
  }
  return t;
}

ValueTables policy_value(const MdpSpec& mdp, const Policy& policy) {
  if (policy.horizon() != mdp.horizon() || policy.num_states() != mdp.num_states() ||
      policy.num_actions() != mdp.num_actions()) {
    throw std::invalid_argument("policy shape does not match the MDP");
  }
  ValueTables t(mdp.horizon(), mdp.num_states(), mdp.num_actions());
  for (int h = mdp.horizon() - 1; h >= 0; --h) {
    for (int s = 0; s < mdp.num_states(); ++s) {
      double v = 0.0;
      for (int a = 0; a < mdp.num_actions(); ++a) {
        const double q = mdp.reward(h, s, a) + expected_next(mdp, t, h, s, a);
        t.action_value(h, s, a) = q;
        v += policy.probability(h, s, a) * q;
      }
      t.value(h, s) = v;
    }
  }
  return t;
}

Policy greedy_policy(const ValueTables& t) {
  std::vector<int> actions(static_cast<std::size_t>(t.horizon * t.num_states), 0);
  for (int h = 0; h < t.horizon; ++h) {
    for (int s = 0; s < t.num_states; ++s) {
      int best = 0;
      for (int a = 1; a < t.num_actions; ++a) {
        if (t.action_value(h, s, a) > t.action_value(h, s, best)) best = a;
      }
      actions[static_cast<std::size_t>(h * t.num_states + s)] = best;
    }
  }
  return Policy::deterministic(t.horizon, t.num_states, t.num_actions, actions);
}

double next_state_variance(const MdpSpec& mdp, const ValueTables& t, int h, int s, int a) {
  const auto row = mdp.transition_row(h, s, a);
  double mean = 0.0, second = 0.0;
  for (int n = 0; n < mdp.num_states(); ++n) {
    const double v = t.value(h + 1, n);
    mean += row[static_cast<std::size_t>(n)] * v;
    second += row[static_cast<std::size_t>(n)] * v * v;
  }
  return std::max(0.0, second - mean * mean);
}

}  // namespace mqlucb
