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
#include "mqlucb/algo/qstack.hpp"
#include "mqlucb/algo/switching.hpp"
#include "mqlucb/algo/variance.hpp"
#include "mqlucb/func/dataset.hpp"
#include "mqlucb/func/function_class.hpp"
#include "mqlucb/func/uncertainty.hpp"

namespace mqlucb {

/// Monotonic Q-learning with UCB: variance-weighted regressions, monotone
/// optimistic/pessimistic stacks and uncertainty-triggered rare switching.
///
/// One function class is shared by all stages; its domain is the
/// state-action index s * |A| + a of the MDP.
class MqlUcbAgent final : public Agent {
 public:
  MqlUcbAgent(const MdpSpec& mdp, std::shared_ptr<const FunctionClass> cls, AlgoConfig cfg,
              int num_episodes);

  std::string name() const override { return "mql-ucb"; }
  bool wants_switch(int k) const override;
  void plan(int k) override;
  const Policy& policy() const override { return policy_; }
  void observe(const Trajectory& trajectory) override;
  double bonus(int h, int z) const override;
  std::optional<double> optimistic_value(int h, int s) const override;
  InvariantCounters invariants() const override { return counters_; }

  const QStack& stack(int h) const { return stacks_[static_cast<std::size_t>(h)]; }
  const StageDataset& dataset(int h) const { return data_[static_cast<std::size_t>(h)]; }
  const UncertaintyState& uncertainty(int h) const { return *unc_[static_cast<std::size_t>(h)]; }
  const SwitchState& switch_state() const { return switch_; }
  const AlgoConfig& config() const { return cfg_; }
  double alpha() const { return alpha_; }
  /// Schedule in force at episode k given the current switch count.
  BetaSchedule schedule(int k) const;
  /// Variance records of the last observed episode, one per stage.
  const std::vector<VarianceRecord>& last_records() const { return last_records_; }

 private:
  void check_stability();

  const MdpSpec& mdp_;
  std::shared_ptr<const FunctionClass> cls_;
  AlgoConfig cfg_;
  int num_episodes_;
  double alpha_;
  std::vector<StageDataset> data_;
  std::vector<std::unique_ptr<UncertaintyState>> unc_;
  std::vector<QStack> stacks_;
  std::vector<Regressor> f_hat_;
  std::vector<Regressor> f_check_;
  std::vector<Regressor> f_tilde_;
  SwitchState switch_;
  Policy policy_;
  InvariantCounters counters_;
  std::vector<VarianceRecord> last_records_;
  Rng probe_rng_;
};

RunMetrics run_mql_ucb(const MdpSpec& mdp, std::shared_ptr<const FunctionClass> cls,
                       const AlgoConfig& cfg, int num_episodes, Rng& rng);

}  // namespace mqlucb
