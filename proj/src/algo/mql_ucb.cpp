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

#include "mqlucb/algo/mql_ucb.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mqlucb/algo/runner.hpp"

namespace mqlucb {

namespace {

Policy greedy_from_stacks(const std::vector<QStack>& stacks, int S, int A) {
  const int H = static_cast<int>(stacks.size());
  std::vector<int> actions(static_cast<std::size_t>(H * S));
  for (int h = 0; h < H; ++h) {
    for (int s = 0; s < S; ++s) {
      actions[static_cast<std::size_t>(h * S + s)] = stacks[static_cast<std::size_t>(h)].act(s);
    }
  }
  return Policy::deterministic(H, S, A, actions);
}

}  // namespace

MqlUcbAgent::MqlUcbAgent(const MdpSpec& mdp, std::shared_ptr<const FunctionClass> cls,
                         AlgoConfig cfg, int num_episodes)
    : mdp_(mdp),
      cls_(std::move(cls)),
      cfg_(cfg),
      num_episodes_(num_episodes),
      switch_(mdp.horizon()),
      policy_(Policy::uniform(1, 1, 1)),
      probe_rng_(cfg.probe_seed) {
  validate(cfg_);
  if (!cls_) throw std::invalid_argument("function class is null");
  if (cls_->domain_size() != mdp.num_pairs()) {
    throw std::invalid_argument("function class domain does not match |S||A|");
  }
  if (num_episodes < 1) throw std::invalid_argument("K must be >= 1");
  alpha_ = resolved_alpha(cfg_, {cls_->complexity(), mdp.horizon(), num_episodes, 0});
  const int H = mdp.horizon();
  const int n = mdp.num_pairs();
  for (int h = 0; h < H; ++h) {
    data_.emplace_back(alpha_);
    unc_.push_back(cls_->make_uncertainty(cfg_.lambda, alpha_, cfg_.refresh_period));
    stacks_.emplace_back(mdp.num_states(), mdp.num_actions());
    f_hat_.push_back(Regressor::zero(n));
    f_check_.push_back(Regressor::zero(n));
    f_tilde_.push_back(Regressor::zero(n));
  }
  policy_ = greedy_from_stacks(stacks_, mdp.num_states(), mdp.num_actions());
}

BetaSchedule MqlUcbAgent::schedule(int k) const {
  return beta_schedule(cfg_, {cls_->complexity(), mdp_.horizon(), num_episodes_, switch_.switches},
                       k);
}

bool MqlUcbAgent::wants_switch(int k) const { return should_switch(switch_, cfg_, k); }

void MqlUcbAgent::plan(int k) {
  const BetaSchedule beta = schedule(k);
  const int S = mdp_.num_states();
  const int n = mdp_.num_pairs();
  std::vector<double> next_v(static_cast<std::size_t>(S), 0.0);
  std::vector<double> next_vc(static_cast<std::size_t>(S), 0.0);

  for (int h = mdp_.horizon() - 1; h >= 0; --h) {
    const auto hh = static_cast<std::size_t>(h);
    const StageDataset& data = data_[hh];
    FitResult opt = fit_weighted_ls(*cls_, data, TargetKind::kOptimistic, next_v, cfg_.lambda);
    FitResult pes = fit_weighted_ls(*cls_, data, TargetKind::kPessimistic, next_vc, cfg_.lambda);
    FitResult sq = fit_weighted_ls(*cls_, data, TargetKind::kSquared, next_v, cfg_.lambda);
    counters_.max_residual_ratio = std::max(
        {counters_.max_residual_ratio, opt.residual_ratio, pes.residual_ratio, sq.residual_ratio});

    unc_[hh]->freeze();
    std::vector<double> d_bar = unc_[hh]->d2_all(Snapshot::kFrozen);
    for (double& d : d_bar) d = std::sqrt(std::max(0.0, d));

    QStack& stack = stacks_[hh];
    const std::vector<double> q_old = stack.q_table();
    const std::vector<double> qc_old = stack.q_check_table();
    stack.push({k, opt.regressor, pes.regressor, beta.bonus, beta.bonus, std::move(d_bar)});
    for (int z = 0; z < n; ++z) {
      const double q = stack.q(z);
      const double qc = stack.q_check(z);
      if (q > q_old[static_cast<std::size_t>(z)]) ++counters_.monotone_violations;
      if (qc < qc_old[static_cast<std::size_t>(z)]) ++counters_.monotone_violations;
      if (qc > q) ++counters_.ordering_violations;
      if (q < 0.0 || q > 1.0 || qc < 0.0 || qc > 1.0) ++counters_.range_violations;
    }

    f_hat_[hh] = std::move(opt.regressor);
    f_check_[hh] = std::move(pes.regressor);
    f_tilde_[hh] = std::move(sq.regressor);
    next_v = stack.values();
    next_vc = stack.check_values();
  }
  switch_.reset(k);
  policy_ = greedy_from_stacks(stacks_, S, mdp_.num_actions());
}

void MqlUcbAgent::observe(const Trajectory& traj) {
  if (static_cast<int>(traj.steps.size()) != mdp_.horizon()) {
    throw std::invalid_argument("trajectory length differs from the horizon");
  }
  if (cfg_.stability_probes > 0) check_stability();

  const BetaSchedule beta = schedule(traj.episode);
  last_records_.clear();
  for (const auto& step : traj.steps) {
    const auto hh = static_cast<std::size_t>(step.stage);
    const int z = mdp_.pair_index(step.state, step.action);
    UncertaintyState& unc = *unc_[hh];

    const double d_bar = std::sqrt(std::max(0.0, unc.d2(z, Snapshot::kCurrent)));
    const VarianceRecord rec = estimate_variance(
        {f_hat_[hh](z), f_check_[hh](z), f_tilde_[hh](z), d_bar}, beta, alpha_, cfg_.range_bound);
    if (rec.sigma_bar < alpha_ || rec.sigma_bar < beta.gamma * std::sqrt(d_bar)) {
      ++counters_.sigma_floor_violations;
    }

    switch_.accumulate(step.stage, unc.d2(z, Snapshot::kFrozen), rec.sigma_bar);
    data_[hh].append({z, step.next_state, step.reward, rec.sigma_bar});
    unc.update(z, rec.sigma_bar);
    last_records_.push_back(rec);
  }
}

void MqlUcbAgent::check_stability() {
  const int H = mdp_.horizon();
  for (int h = 0; h < H; ++h) {
    // The bound only applies while the stage is below the switching threshold.
    if (switch_.switches == 0 || switch_.accumulators[static_cast<std::size_t>(h)] >= cfg_.chi) {
      continue;
    }
    const auto* lin = dynamic_cast<const LinearUncertainty*>(unc_[static_cast<std::size_t>(h)].get());
    if (lin == nullptr) return;
    const int d = lin->gram(Snapshot::kCurrent).dimension();
    std::normal_distribution<double> normal;
    for (int p = 0; p < cfg_.stability_probes; ++p) {
      Eigen::VectorXd x(d);
      for (int i = 0; i < d; ++i) x(i) = normal(probe_rng_);
      x /= std::max(x.norm(), 1e-300);
      const double cur = lin->d2(x, Snapshot::kCurrent);
      const double frozen = lin->d2(x, Snapshot::kFrozen);
      ++counters_.stability_checks;
      if (cur < frozen / (1.0 + cfg_.chi) * (1.0 - 1e-12)) ++counters_.stability_violations;
    }
  }
}

double MqlUcbAgent::bonus(int h, int z) const {
  const QStack& stack = stacks_[static_cast<std::size_t>(h)];
  return stack.depth() == 0 ? 0.0 : stack.snapshots().back().bonus(z);
}

std::optional<double> MqlUcbAgent::optimistic_value(int h, int s) const {
  const QStack& stack = stacks_[static_cast<std::size_t>(h)];
  double v = 0.0;
  for (int a = 0; a < mdp_.num_actions(); ++a) v = std::max(v, stack.q(mdp_.pair_index(s, a)));
  return v;
}

RunMetrics run_mql_ucb(const MdpSpec& mdp, std::shared_ptr<const FunctionClass> cls,
                       const AlgoConfig& cfg, int num_episodes, Rng& rng) {
  MqlUcbAgent agent(mdp, std::move(cls), cfg, num_episodes);
  return run_agent(mdp, agent, num_episodes, rng);
}

}  // namespace mqlucb
