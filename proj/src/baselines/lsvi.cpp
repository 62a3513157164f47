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

#include "mqlucb/baselines/lsvi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mqlucb/algo/runner.hpp"

namespace mqlucb {

LsviUcbAgent::LsviUcbAgent(const MdpSpec& mdp, std::shared_ptr<const LinearClass> cls,
                           BaselineConfig cfg)
    : mdp_(mdp), cls_(std::move(cls)), cfg_(cfg), policy_(Policy::uniform(1, 1, 1)) {
  if (!cls_) throw std::invalid_argument("function class is null");
  if (cls_->domain_size() != mdp.num_pairs()) {
    throw std::invalid_argument("function class domain does not match |S||A|");
  }
  if (!(cfg.lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  if (cfg.c_bonus < 0.0) throw std::invalid_argument("c_bonus must be nonnegative");
  const int n = mdp.num_pairs();
  const double lambda_eff = cls_->effective_lambda(cfg.lambda);
  for (int h = 0; h < mdp.horizon(); ++h) {
    data_.emplace_back(1.0);
    unc_.push_back(std::make_unique<LinearUncertainty>(cls_->features().matrix(),
                                                       cls_->features().dimension(), lambda_eff,
                                                       1.0, cfg.refresh_period));
    q_.emplace_back(static_cast<std::size_t>(n), 1.0);
    bonus_.emplace_back(static_cast<std::size_t>(n), 0.0);
  }
  policy_ = Policy::deterministic(mdp.horizon(), mdp.num_states(), mdp.num_actions(),
                                  std::vector<int>(static_cast<std::size_t>(mdp.horizon() *
                                                                            mdp.num_states()),
                                                   0));
}

std::string LsviUcbAgent::name() const {
  return cfg_.rule == SwitchRule::kEveryEpisode ? "lsvi-ucb" : "lsvi-ucb-det";
}

bool LsviUcbAgent::det_doubled() const {
  return std::any_of(unc_.begin(), unc_.end(), [](const auto& u) {
    return u->gram(Snapshot::kCurrent).log_det() >=
           u->gram(Snapshot::kFrozen).log_det() + std::numbers::ln2;
  });
}

bool LsviUcbAgent::wants_switch(int) const {
  if (cfg_.rule == SwitchRule::kEveryEpisode || plans_ == 0) return true;
  return det_doubled();
}

void LsviUcbAgent::plan(int k) {
  const int S = mdp_.num_states();
  const int A = mdp_.num_actions();
  const int n = mdp_.num_pairs();
  const double beta = cfg_.c_bonus * std::sqrt(cls_->complexity() * std::log1p(k));
  std::vector<double> next_v(static_cast<std::size_t>(S), 0.0);
  std::vector<int> actions(static_cast<std::size_t>(mdp_.horizon() * S));

  for (int h = mdp_.horizon() - 1; h >= 0; --h) {
    const auto hh = static_cast<std::size_t>(h);
    const FitResult fit =
        fit_weighted_ls(*cls_, data_[hh], TargetKind::kOptimistic, next_v, cfg_.lambda);
    counters_.max_residual_ratio = std::max(counters_.max_residual_ratio, fit.residual_ratio);
    unc_[hh]->freeze();
    const std::vector<double> d2 = unc_[hh]->d2_all(Snapshot::kFrozen);
    for (int z = 0; z < n; ++z) {
      const auto zz = static_cast<std::size_t>(z);
      bonus_[hh][zz] = beta * std::sqrt(std::max(0.0, d2[zz]));
      q_[hh][zz] = std::clamp(fit.regressor(z) + bonus_[hh][zz], 0.0, 1.0);
    }
    for (int s = 0; s < S; ++s) {
      const auto row = q_[hh].begin() + s * A;
      const auto best = std::max_element(row, row + A);
      actions[static_cast<std::size_t>(h * S + s)] = static_cast<int>(best - row);
      next_v[static_cast<std::size_t>(s)] = *best;
    }
  }
  ++plans_;
  policy_ = Policy::deterministic(mdp_.horizon(), S, A, actions);
}

void LsviUcbAgent::observe(const Trajectory& traj) {
  for (const auto& step : traj.steps) {
    const auto hh = static_cast<std::size_t>(step.stage);
    const int z = mdp_.pair_index(step.state, step.action);
    data_[hh].append({z, step.next_state, step.reward, 1.0});
    unc_[hh]->update(z, 1.0);
  }
}

double LsviUcbAgent::bonus(int h, int z) const {
  return bonus_[static_cast<std::size_t>(h)][static_cast<std::size_t>(z)];
}

std::optional<double> LsviUcbAgent::optimistic_value(int h, int s) const {
  const auto& q = q_[static_cast<std::size_t>(h)];
  const auto row = q.begin() + s * mdp_.num_actions();
  return *std::max_element(row, row + mdp_.num_actions());
}

RunMetrics run_lsvi_ucb(const MdpSpec& mdp, std::shared_ptr<const LinearClass> cls,
                        BaselineConfig cfg, int num_episodes, Rng& rng) {
  cfg.rule = SwitchRule::kEveryEpisode;
  LsviUcbAgent agent(mdp, std::move(cls), cfg);
  return run_agent(mdp, agent, num_episodes, rng);
}

RunMetrics run_det_rare_switch(const MdpSpec& mdp, std::shared_ptr<const LinearClass> cls,
                               BaselineConfig cfg, int num_episodes, Rng& rng) {
  cfg.rule = SwitchRule::kDetDoubling;
  LsviUcbAgent agent(mdp, std::move(cls), cfg);
  return run_agent(mdp, agent, num_episodes, rng);
}

}  // namespace mqlucb
