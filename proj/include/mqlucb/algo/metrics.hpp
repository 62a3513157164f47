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

#include <string>
#include <vector>

namespace mqlucb {

/// One trace row per episode.
struct EpisodeRow {
  int k = 0;
  double regret = 0.0;
  double cum_regret = 0.0;
  int switches = 0;  // l_k after episode k's switch decision
  double max_bonus = 0.0;
  double reward = 0.0;

  bool operator==(const EpisodeRow&) const = default;
};

/// Runtime checks of the value-stack and weighting contracts.
struct InvariantCounters {
  long monotone_violations = 0;  // Q increased or Q_check decreased at a push
  long ordering_violations = 0;  // Q_check > Q
  long range_violations = 0;     // a stack value outside [0, 1]
  long sigma_floor_violations = 0;
  long stability_checks = 0;
  long stability_violations = 0;
  long optimism_checks = 0;      // visited (k, h)
  long optimism_violations = 0;  // V_{k,h}(s_h^k) < V*_h(s_h^k) - 1e-9
  double max_residual_ratio = 0.0;

  long value_violations() const {
    return monotone_violations + ordering_violations + range_violations;
  }
  double optimism_violation_rate() const {
    return optimism_checks == 0 ? 0.0
                                : static_cast<double>(optimism_violations) / optimism_checks;
  }
  void merge(const InvariantCounters& other);

  bool operator==(const InvariantCounters&) const = default;
};

struct RunMetrics {
  std::string agent;
  unsigned long long seed = 0;
  std::vector<EpisodeRow> rows;
  double final_regret = 0.0;
  int total_switches = 0;
  /// Sum over episodes and stages of Var_{s' ~ P_h(z)}[V^{pi^k}_{h+1}(s')].
  double var_k = 0.0;
  double wall_seconds = 0.0;
  /// Episodes where the agent asked to replan (may exceed plan_calls under a budget).
  int switch_fires = 0;
  int plan_calls = 0;
  InvariantCounters invariants;
};

}  // namespace mqlucb
