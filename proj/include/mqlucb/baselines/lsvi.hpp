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

#include <memory>
#include <optional>
#include <vector>

#include "mqlucb/algo/agent.hpp"
#include "mqlucb/algo/config.hpp"
#include "mqlucb/func/dataset.hpp"
#include "mqlucb/func/function_class.hpp"
#include "mqlucb/func/uncertainty.hpp"

namespace mqlucb {

enum class SwitchRule { kEveryEpisode, kDetDoubling };

struct BaselineConfig {
  double lambda = 1.0;
  /// Bonus beta_k = c_bonus * sqrt(d log(1 + k)); same default as MQL-UCB.
  double c_bonus = 0.5;
  SwitchRule rule = SwitchRule::kEveryEpisode;
  int refresh_period = 256;
};

/// Unweighted least-squares value iteration with elliptical bonus
/// beta * sqrt(phi^T A^{-1} phi) and Q = clip(f + bonus, 0, 1).
///
/// kDetDoubling replans only once det(A_h) has doubled since the last plan
/// for some stage h; the log-determinants come from the maintained factors.
class LsviUcbAgent final : public Agent {
 public:
  LsviUcbAgent(const MdpSpec& mdp, std::shared_ptr<const LinearClass> cls, BaselineConfig cfg);

  std::string name() const override;
  bool wants_switch(int k) const override;
  void plan(int k) override;
  const Policy& policy() const override { return policy_; }
  void observe(const Trajectory& trajectory) override;
  double bonus(int h, int z) const override;
  std::optional<double> optimistic_value(int h, int s) const override;
  InvariantCounters invariants() const override { return counters_; }

  const LinearUncertainty& uncertainty(int h) const { return *unc_[static_cast<std::size_t>(h)]; }
  /// True if det(current) >= 2 det(frozen) at some stage.
  bool det_doubled() const;

 private:
  const MdpSpec& mdp_;
  std::shared_ptr<const LinearClass> cls_;
  BaselineConfig cfg_;
  std::vector<StageDataset> data_;
  std::vector<std::unique_ptr<LinearUncertainty>> unc_;
  std::vector<std::vector<double>> q_;      // per stage, per pair
  std::vector<std::vector<double>> bonus_;  // per stage, per pair
  int plans_ = 0;
  Policy policy_;
  InvariantCounters counters_;
};

RunMetrics run_lsvi_ucb(const MdpSpec& mdp, std::shared_ptr<const LinearClass> cls,
                        BaselineConfig cfg, int num_episodes, Rng& rng);
RunMetrics run_det_rare_switch(const MdpSpec& mdp, std::shared_ptr<const LinearClass> cls,
                               BaselineConfig cfg, int num_episodes, Rng& rng);

}  // namespace mqlucb
