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

#include "mqlucb/algo/runner.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "mqlucb/env/dp.hpp"

namespace mqlucb {

void InvariantCounters::merge(const InvariantCounters& o) {
  monotone_violations += o.monotone_violations;
  ordering_violations += o.ordering_violations;
  range_violations += o.range_violations;
  sigma_floor_violations += o.sigma_floor_violations;
  stability_checks += o.stability_checks;
  stability_violations += o.stability_violations;
  optimism_checks += o.optimism_checks;
  optimism_violations += o.optimism_violations;
  max_residual_ratio = std::max(max_residual_ratio, o.max_residual_ratio);
}

RunMetrics run_agent(const MdpSpec& mdp, Agent& agent, int num_episodes, Rng& rng,
                     std::optional<int> budget) {
  if (num_episodes < 1) throw std::invalid_argument("K must be >= 1");
  if (budget && *budget < 0) throw std::invalid_argument("budget must be >= 0");

  const auto start = std::chrono::steady_clock::now();
  const ValueTables optimal = optimal_values(mdp);

  RunMetrics m;
  m.agent = agent.name();
  m.rows.reserve(static_cast<std::size_t>(num_episodes));

  std::optional<ValueTables> executed;
  double cum = 0.0;
  InvariantCounters optimism;

  for (int k = 1; k <= num_episodes; ++k) {
    if (agent.wants_switch(k)) {
      ++m.switch_fires;
      if (!budget || m.plan_calls < *budget) {
        agent.plan(k);
        ++m.plan_calls;
        executed.reset();
      }
    }
    if (budget && m.plan_calls > *budget) throw std::logic_error("switch budget exceeded");
    if (!executed) executed = policy_value(mdp, agent.policy());

    const Trajectory traj = simulate_episode(mdp, agent.policy(), k, rng);
    const int s1 = traj.steps.front().state;
    const double regret = optimal.value(0, s1) - executed->value(0, s1);
    cum += regret;

    double max_bonus = 0.0;
    for (const auto& step : traj.steps) {
      const int z = mdp.pair_index(step.state, step.action);
      max_bonus = std::max(max_bonus, agent.bonus(step.stage, z));
      m.var_k += next_state_variance(mdp, *executed, step.stage, step.state, step.action);
      if (const auto v = agent.optimistic_value(step.stage, step.state)) {
        ++optimism.optimism_checks;
        if (*v < optimal.value(step.stage, step.state) - 1e-9) ++optimism.optimism_violations;
      }
    }

    agent.observe(traj);
    m.rows.push_back({k, regret, cum, m.plan_calls, max_bonus, traj.total_reward()});
  }

  m.final_regret = cum;
  m.total_switches = m.plan_calls;
  m.invariants = agent.invariants();
  m.invariants.merge(optimism);
  m.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return m;
}

RunMetrics run_budget_limited(const MdpSpec& mdp, Agent& agent, int budget, int num_episodes,
                              Rng& rng) {
  return run_agent(mdp, agent, num_episodes, rng, budget);
}

}  // namespace mqlucb
