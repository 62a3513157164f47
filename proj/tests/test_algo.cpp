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

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <random>

#include "mqlucb/algo/config.hpp"
#include "mqlucb/algo/mql_ucb.hpp"
#include "mqlucb/algo/qstack.hpp"
#include "mqlucb/algo/runner.hpp"
#include "mqlucb/algo/switching.hpp"
#include "mqlucb/algo/variance.hpp"
#include "mqlucb/env/dp.hpp"
#include "mqlucb/env/generators.hpp"
#include "mqlucb/func/feature_map.hpp"

namespace mqlucb {
namespace {

std::shared_ptr<const LinearClass> one_hot(const MdpSpec& mdp) {
  return std::make_shared<LinearClass>(make_tabular_linear(mdp));
}

QSnapshot snapshot(std::vector<double> opt, std::vector<double> pes, std::vector<double> d_bar,
                   double beta) {
  const int n = static_cast<int>(opt.size());
  QSnapshot s;
  s.optimistic = Regressor::finite(0, std::move(opt));
  s.pessimistic = Regressor::finite(0, std::move(pes));
  s.beta_optimistic = s.beta_pessimistic = beta;
  s.d_bar = std::move(d_bar);
  (void)n;
  return s;
}

TEST(ShouldSwitch, Examples) {
  AlgoConfig cfg;
  cfg.chi = 1.0;
  SwitchState sw(2);
  EXPECT_TRUE(should_switch(sw, cfg, 1));
  sw.reset(1);
  sw.accumulators = {0.3, 0.9};
  EXPECT_FALSE(should_switch(sw, cfg, 5));
  sw.accumulators = {1.0, 0.0};
  EXPECT_TRUE(should_switch(sw, cfg, 5));
}

TEST(SwitchState, AccumulateAndReset) {
  SwitchState sw(2);
  sw.reset(1);
  sw.accumulate(1, 0.5, 0.5);
  EXPECT_DOUBLE_EQ(sw.accumulators[1], 2.0);
  sw.reset(7);
  EXPECT_EQ(sw.last_switch, 7);
  EXPECT_EQ(sw.switches, 2);
  EXPECT_EQ(sw.accumulators[1], 0.0);
}

TEST(EstimateVariance, VarianceTerm) {
  const BetaSchedule b{0.0, 0.0, 0.0, 0.0, 0.0};
  const auto r = estimate_variance({0.5, 0.5, 0.5, 0.0}, b, 0.01, 1.0);
  EXPECT_DOUBLE_EQ(r.variance_estimate, 0.25);
}

TEST(EstimateVariance, BonusChannels) {
  // 2 L beta + beta_tilde = 3 with L = 1, beta = 1, beta_tilde = 1.
  const BetaSchedule e{0.0, 1.0, 1.0, 0.0, 0.0};
  EXPECT_NEAR(estimate_variance({0.0, 0.0, 0.0, 0.2}, e, 0.01, 1.0).e_bonus, 0.6, 1e-15);

  const BetaSchedule f{0.0, 1.0, 0.0, 0.0, 2.0};
  EXPECT_NEAR(estimate_variance({0.6, 0.5, 0.0, 0.1}, f, 0.01, 1.0).f_bonus, 1.2, 1e-12);

  // f_hat < f_check transiently: F clipped at zero.
  EXPECT_EQ(estimate_variance({0.1, 0.9, 0.0, 0.0}, f, 0.01, 1.0).f_bonus, 0.0);
}

TEST(EstimateVariance, SigmaBarIsMaxOfThree) {
  const BetaSchedule b{0.0, 0.0, 0.0, 2.0, 0.0};
  const auto r = estimate_variance({0.0, 0.0, 0.01, 0.09}, b, 0.01, 1.0);
  EXPECT_NEAR(r.sigma, 0.1, 1e-15);
  EXPECT_NEAR(r.sigma_bar, 0.6, 1e-15);

  // Negative variance estimates are clipped before the square root.
  const auto neg = estimate_variance({0.9, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0, 0.0}, 0.05, 1.0);
  EXPECT_EQ(neg.variance_estimate, 0.0);
  EXPECT_EQ(neg.sigma_bar, 0.05);
}

TEST(EstimateVariance, FloorsHoldOnRandomInputs) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const BetaSchedule b{u(rng), 3 * u(rng), 3 * u(rng), 2 * u(rng), u(rng)};
    const double alpha = 0.01 + 0.1 * u(rng);
    const VarianceInputs in{u(rng), u(rng), u(rng), 2 * u(rng)};
    const auto r = estimate_variance(in, b, alpha, 1.0);
    EXPECT_GE(r.e_bonus, 0.0);
    EXPECT_GE(r.f_bonus, 0.0);
    EXPECT_GE(r.sigma_bar, alpha);
    EXPECT_GE(r.sigma_bar, b.gamma * std::sqrt(in.d_bar));
    EXPECT_GE(r.sigma_bar, r.sigma);
  }
}

TEST(QStack, ActArgmaxAndTieBreak) {
  QStack a(1, 2);
  a.push(snapshot({0.2, 0.7}, {0.0, 0.0}, {0.0, 0.0}, 0.0));
  EXPECT_EQ(a.act(0), 1);
  QStack b(1, 2);
  b.push(snapshot({0.5, 0.5}, {0.0, 0.0}, {0.0, 0.0}, 0.0));
  EXPECT_EQ(b.act(0), 0);
}

TEST(QStack, RandomPushesStayMonotoneOrderedAndClipped) {
  // Every snapshot brackets a common truth t: |f - t| <= beta * d_bar.
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double beta = 0.3;
  std::vector<double> truth(6);
  for (auto& t : truth) t = u(rng);
  QStack st(3, 2);
  auto prev_q = st.q_table();
  auto prev_c = st.q_check_table();
  for (int j = 0; j < 50; ++j) {
    std::vector<double> f(6), g(6), db(6);
    for (std::size_t z = 0; z < 6; ++z) {
      db[z] = 2.0 * u(rng);
      f[z] = truth[z] + beta * db[z] * (2.0 * u(rng) - 1.0);
      g[z] = truth[z] + beta * db[z] * (2.0 * u(rng) - 1.0);
    }
    st.push(snapshot(f, g, db, beta));
    for (int z = 0; z < 6; ++z) {
      EXPECT_LE(st.q(z), prev_q[static_cast<std::size_t>(z)]);
      EXPECT_GE(st.q_check(z), prev_c[static_cast<std::size_t>(z)]);
      EXPECT_LE(st.q_check(z), st.q(z));
      EXPECT_GE(st.q_check(z), 0.0);
      EXPECT_LE(st.q(z), 1.0);
      EXPECT_EQ(st.q(z), st.q_from_snapshots(z));
      EXPECT_EQ(st.q_check(z), st.q_check_from_snapshots(z));
    }
    prev_q = st.q_table();
    prev_c = st.q_check_table();
  }
}

TEST(Plan, EmptyDataPlanIsBonusOnly) {
  Rng g(3);
  const MdpSpec mdp = make_random_mdp(RandomMdpOptions{}, g);
  AlgoConfig cfg;
  MqlUcbAgent agent(mdp, one_hot(mdp), cfg, 100);
  ASSERT_TRUE(agent.wants_switch(1));
  agent.plan(1);
  const double beta1 = agent.schedule(1).bonus;
  EXPECT_NEAR(beta1, 0.5 * std::sqrt(12 * std::log(2.0)), 1e-12);
  for (int h = 0; h < mdp.horizon(); ++h) {
    for (int z = 0; z < mdp.num_pairs(); ++z) {
      // Empty one-hot data: D-bar = 1 everywhere, f_hat = 0.
      EXPECT_NEAR(agent.stack(h).q(z), std::min(1.0, beta1), 1e-12);
      EXPECT_EQ(agent.stack(h).q_check(z), 0.0);
    }
    for (int s = 0; s < mdp.num_states(); ++s) EXPECT_EQ(agent.policy().probability(h, s, 0), 1.0);
  }
}

TEST(Plan, ReplanningNeverLoosensStacks) {
  Rng g(4);
  const MdpSpec mdp = make_random_mdp(RandomMdpOptions{}, g);
  MqlUcbAgent agent(mdp, one_hot(mdp), calibrated_practical_config(), 300);
  Rng rng(5);
  std::vector<std::vector<double>> q(3), qc(3);
  for (int k = 1; k <= 300; ++k) {
    if (agent.wants_switch(k)) {
      agent.plan(k);
      for (int h = 0; h < 3; ++h) {
        const auto& st = agent.stack(h);
        if (!q[static_cast<std::size_t>(h)].empty()) {
          for (int z = 0; z < mdp.num_pairs(); ++z) {
            EXPECT_LE(st.q(z), q[static_cast<std::size_t>(h)][static_cast<std::size_t>(z)]);
            EXPECT_GE(st.q_check(z), qc[static_cast<std::size_t>(h)][static_cast<std::size_t>(z)]);
          }
        }
        q[static_cast<std::size_t>(h)] = st.q_table();
        qc[static_cast<std::size_t>(h)] = st.q_check_table();
      }
    }
    agent.observe(simulate_episode(mdp, agent.policy(), k, rng));
  }
  EXPECT_EQ(agent.invariants().value_violations(), 0);
}

TEST(Plan, Chain2TheoryModeIsOptimisticAtStart) {
  const MdpSpec mdp = make_chain2();
  AlgoConfig cfg;
  cfg.mode = BetaMode::kTheory;
  MqlUcbAgent agent(mdp, one_hot(mdp), cfg, 500);
  Rng rng(6);
  const RunMetrics m = run_agent(mdp, agent, 500, rng);
  const int z = mdp.pair_index(0, 0);
  EXPECT_GE(agent.stack(0).q(z), 1.0 - 1e-9);
  EXPECT_LE(agent.stack(0).q_check(z), 1.0);
  EXPECT_EQ(m.invariants.optimism_violations, 0);
}

TEST(RunMqlUcb, Chain2RegretLocksIn) {
  const MdpSpec mdp = make_chain2();
  Rng rng(7);
  const RunMetrics m = run_mql_ucb(mdp, one_hot(mdp), AlgoConfig{}, 200, rng);
  ASSERT_EQ(m.rows.size(), 200u);
  for (std::size_t i = 1; i < m.rows.size(); ++i) {
    EXPECT_GE(m.rows[i].cum_regret, m.rows[i - 1].cum_regret);
    EXPECT_GE(m.rows[i].switches, m.rows[i - 1].switches);
  }
  for (std::size_t i = 150; i < m.rows.size(); ++i) EXPECT_EQ(m.rows[i].regret, 0.0) << "episode " << i + 1;
}

TEST(RunMqlUcb, SwitchCountersAgree) {
  Rng g(8);
  const MdpSpec mdp = make_random_mdp(RandomMdpOptions{}, g);
  Rng rng(9);
  const RunMetrics m = run_mql_ucb(mdp, one_hot(mdp), calibrated_practical_config(), 1000, rng);
  EXPECT_EQ(m.total_switches, m.plan_calls);
  EXPECT_EQ(m.total_switches, m.switch_fires);
  EXPECT_EQ(m.rows.back().switches, m.total_switches);
  EXPECT_LE(m.total_switches, 3.0 * 12 * 3 * std::log2(1001.0));
  EXPECT_EQ(m.invariants.value_violations(), 0);
  EXPECT_EQ(m.invariants.sigma_floor_violations, 0);
  EXPECT_EQ(m.invariants.stability_violations, 0);
  EXPECT_GT(m.invariants.stability_checks, 0);
  EXPECT_LE(m.invariants.max_residual_ratio, 1e-8);
  EXPECT_GE(m.var_k, 0.0);
}

TEST(RunMqlUcb, Deterministic) {
  Rng g(10);
  const MdpSpec mdp = make_random_mdp(RandomMdpOptions{}, g);
  Rng r1(11), r2(11);
  const RunMetrics a = run_mql_ucb(mdp, one_hot(mdp), AlgoConfig{}, 300, r1);
  const RunMetrics b = run_mql_ucb(mdp, one_hot(mdp), AlgoConfig{}, 300, r2);
  EXPECT_EQ(a.rows, b.rows);
  EXPECT_EQ(a.var_k, b.var_k);
}

TEST(RunMqlUcb, FiniteClassRuns) {
  // Every function on the 4 state-action pairs with values in {0, 1/3, 2/3, 1}.
  const MdpSpec mdp = make_chain2();
  const int n = mdp.num_pairs();
  Eigen::MatrixXd values(256, n);
  for (int f = 0; f < 256; ++f) {
    for (int z = 0, code = f; z < n; ++z, code /= 4) values(f, z) = (code % 4) / 3.0;
  }
  auto cls = std::make_shared<FiniteClass>(values, 1.0);
  Rng rng(12);
  const RunMetrics m = run_mql_ucb(mdp, cls, AlgoConfig{}, 100, rng);
  EXPECT_EQ(m.rows.size(), 100u);
  EXPECT_EQ(m.invariants.value_violations(), 0);
  EXPECT_EQ(m.rows.back().regret, 0.0);
}

TEST(Budget, ZeroBudgetPlaysInitialPolicy) {
  Rng g(13);
  const MdpSpec mdp = make_random_mdp(RandomMdpOptions{}, g);
  MqlUcbAgent agent(mdp, one_hot(mdp), AlgoConfig{}, 200);
  Rng rng(14);
  const RunMetrics m = run_budget_limited(mdp, agent, 0, 200, rng);
  EXPECT_EQ(m.plan_calls, 0);
  const std::vector<int> zeros(static_cast<std::size_t>(mdp.horizon() * mdp.num_states()), 0);
  const double v0 = policy_value(mdp, Policy::deterministic(mdp.horizon(), mdp.num_states(), mdp.num_actions(), zeros)).value(0, 0);
  const double vstar = optimal_values(mdp).value(0, 0);
  for (const auto& row : m.rows) {
    EXPECT_EQ(row.switches, 0);
    EXPECT_NEAR(row.regret, vstar - v0, 1e-12);
  }
}

TEST(Budget, NonBindingBudgetMatchesUnwrapped) {
  Rng g(15);
  const MdpSpec mdp = make_random_mdp(RandomMdpOptions{}, g);
  const AlgoConfig cfg = calibrated_practical_config();
  MqlUcbAgent a(mdp, one_hot(mdp), cfg, 400), b(mdp, one_hot(mdp), cfg, 400);
  Rng r1(16), r2(16);
  const RunMetrics ma = run_agent(mdp, a, 400, r1);
  const RunMetrics mb = run_budget_limited(mdp, b, 400, 400, r2);
  EXPECT_EQ(ma.rows, mb.rows);
}

TEST(Budget, NeverExceedsCap) {
  Rng g(17);
  const MdpSpec mdp = make_random_mdp(RandomMdpOptions{}, g);
  for (int budget : {1, 3, 10}) {
    MqlUcbAgent agent(mdp, one_hot(mdp), calibrated_practical_config(), 400);
    Rng rng(18);
    const RunMetrics m = run_budget_limited(mdp, agent, budget, 400, rng);
    EXPECT_LE(m.plan_calls, budget);
    EXPECT_EQ(m.rows.back().switches, m.plan_calls);
  }
}

TEST(TheoryBeta, DegenerateRadius) {
  EXPECT_DOUBLE_EQ(std::sqrt(theory_bonus_radius_sq(0.0, 0.0, 1.0, 0.0, 10, 1.0, 0.1)), 1.0);
}

TEST(TheoryBeta, NondecreasingInK) {
  AlgoConfig cfg;
  cfg.mode = BetaMode::kTheory;
  const ScheduleContext ctx{12.0, 3, 5000, 4};
  for (int k = 1; k <= 2048; k *= 2) {
    const auto a = theory_beta(cfg, ctx, k);
    const auto b = theory_beta(cfg, ctx, 2 * k);
    EXPECT_LE(a.bonus, b.bonus);
    EXPECT_LE(a.hoeffding, b.hoeffding);
    EXPECT_LE(a.second, b.second);
    EXPECT_EQ(a.gamma, b.gamma);
  }
}

TEST(TheoryBeta, HoeffdingRadiusByHand) {
  AlgoConfig cfg;
  cfg.mode = BetaMode::kTheory;
  cfg.log_cover_f = 10.0;
  cfg.log_cover_bonus = 1.0;
  cfg.delta = 0.01;
  cfg.alpha = 0.1;
  cfg.cover_eps = 1e-4;
  cfg.range_bound = 1.0;
  const ScheduleContext ctx{4.0, 3, 1000, 0};
  const auto b = theory_beta(cfg, ctx, 100);
  // log N_eps = (0 + 1)(10 + 1) = 11; union log = 11 + 10 + log(3 / 0.01).
  const double union_log = 21.0 + std::log(300.0);
  EXPECT_NEAR(b.hoeffding, std::sqrt(128.0 * union_log + 64.0 * 1e-4 * 100 / 0.01), 1e-10);
  EXPECT_NEAR(b.hoeffding, 59.00917, 1e-4);
  EXPECT_NEAR(b.second, std::sqrt(128.0 * union_log + 64.0 * 1e-4 * 100), 1e-10);
}

TEST(PracticalBeta, Formula) {
  AlgoConfig cfg;
  const auto b = practical_beta(cfg, {12.0, 3, 100, 0}, 9);
  EXPECT_NEAR(b.bonus, 0.5 * std::sqrt(12.0 * std::log(10.0)), 1e-14);
  EXPECT_EQ(b.bonus, b.hoeffding);
  EXPECT_EQ(b.gamma, cfg.gamma);
}

TEST(AlgoConfig, ValidationRejectsBadValues) {
  AlgoConfig cfg;
  cfg.chi = 0.0;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg = AlgoConfig{};
  cfg.lambda = -1.0;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  EXPECT_NO_THROW(validate(calibrated_practical_config()));
}

}  // namespace
}  // namespace mqlucb
