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

#include "mqlucb/func/function_class.hpp"

namespace mqlucb {

/// Everything one switch contributes to a stage: the optimistic and
/// pessimistic regressors with their bonus radii, and D-bar frozen at the
/// switch for every domain point.
struct QSnapshot {
  int episode = 0;
  Regressor optimistic;
  Regressor pessimistic;
  double beta_optimistic = 0.0;
  double beta_pessimistic = 0.0;
  std::vector<double> d_bar;

  double upper(int z) const { return optimistic(z) + beta_optimistic * d_bar[static_cast<std::size_t>(z)]; }
  double lower(int z) const { return pessimistic(z) - beta_pessimistic * d_bar[static_cast<std::size_t>(z)]; }
  double bonus(int z) const { return beta_optimistic * d_bar[static_cast<std::size_t>(z)]; }
};

/// Monotone value envelope of one stage:
///   Q(z)       = clip(min(1, min_j f_hat_j(z) + b_j(z)))
///   Q_check(z) = clip(max(0, max_j f_check_j(z) - b_check_j(z)))
/// Tables are updated in place on every push, so Q only decreases and
/// Q_check only increases. Both are clipped to [0, 1].
class QStack {
 public:
  QStack(int num_states, int num_actions);

  void push(QSnapshot snapshot);

  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }
  std::size_t depth() const { return snapshots_.size(); }
  const std::vector<QSnapshot>& snapshots() const { return snapshots_; }

  double q(int z) const { return q_[static_cast<std::size_t>(z)]; }
  double q_check(int z) const { return q_check_[static_cast<std::size_t>(z)]; }
  const std::vector<double>& q_table() const { return q_; }
  const std::vector<double>& q_check_table() const { return q_check_; }

  /// V(s) = max_a Q(s, a) and V_check(s) = max_a Q_check(s, a), per state.
  std::vector<double> values() const;
  std::vector<double> check_values() const;

  /// argmax_a Q(s, a), lowest index on ties.
  int act(int s) const;

  /// Recomputes Q(z) and Q_check(z) from the snapshot list alone.
  double q_from_snapshots(int z) const;
  double q_check_from_snapshots(int z) const;

 private:
  int num_states_;
  int num_actions_;
  std::vector<double> q_;
  std::vector<double> q_check_;
  std::vector<QSnapshot> snapshots_;
};

}  // namespace mqlucb
