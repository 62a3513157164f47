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

#include "mqlucb/bench/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <random>
#include <thread>

#include "mqlucb/algo/mql_ucb.hpp"
#include "mqlucb/algo/runner.hpp"
#include "mqlucb/baselines/lsvi.hpp"
#include "mqlucb/baselines/uniform.hpp"
#include "mqlucb/bench/trace_io.hpp"
#include "mqlucb/env/generators.hpp"
#include "mqlucb/env/hard_instance.hpp"
#include "mqlucb/env/mdp_io.hpp"
#include "mqlucb/func/feature_map.hpp"

namespace mqlucb {

namespace {

// Keeps instance draws apart from the episode stream of the same seed.
Rng instance_rng(unsigned long long seed) {
  std::seed_seq seq{static_cast<unsigned>(seed & 0xffffffffULL), static_cast<unsigned>(seed >> 32),
                    0x1a57a9ceU};
  return Rng(seq);
}

}  // namespace

MdpSpec build_instance(const InstanceSpec& spec, int num_episodes, unsigned long long run_seed) {
  Rng rng = instance_rng(spec.seed.value_or(run_seed));
  if (spec.generator == "chain2") return make_chain2();
  if (spec.generator == "two_outcome") return make_two_outcome(spec.p);
  if (spec.generator == "random") {
    RandomMdpOptions o;
    o.num_states = spec.num_states;
    o.num_actions = spec.num_actions;
    o.horizon = spec.horizon;
    o.concentration = spec.concentration;
    o.reward_scale = spec.reward_scale;
    return make_random_mdp(o, rng);
  }
  if (spec.generator == "hard") return make_hard_instance(spec.d, spec.horizon, num_episodes, rng).mdp;
  if (spec.generator == "file") return load_mdp(spec.file);
  throw std::invalid_argument("unknown generator " + spec.generator);
}

std::unique_ptr<Agent> build_agent(const AgentSpec& spec, const MdpSpec& mdp, int num_episodes) {
  switch (spec.kind) {
    case AgentKind::kMqlUcb:
      return std::make_unique<MqlUcbAgent>(
          mdp, std::make_shared<LinearClass>(make_tabular_linear(mdp)), spec.algo, num_episodes);
    case AgentKind::kLsviUcb:
    case AgentKind::kLsviUcbDet:
      return std::make_unique<LsviUcbAgent>(
          mdp, std::make_shared<LinearClass>(make_tabular_linear(mdp)), spec.baseline);
    case AgentKind::kUniform:
      return std::make_unique<UniformAgent>(mdp);
  }
  throw std::invalid_argument("unknown agent kind");
}

int lower_bound_budget(const MdpSpec& mdp, int num_episodes) {
  const double d = mdp.num_pairs();
  return static_cast<int>(std::floor(d * mdp.horizon() / (16.0 * std::log(num_episodes))));
}

std::optional<int> resolve_budget(const AgentSpec& spec, const MdpSpec& mdp, int num_episodes) {
  if (spec.budget_lower_bound) return lower_bound_budget(mdp, num_episodes);
  return spec.budget;
}

RunMetrics run_single(const ExperimentSpec& spec, const AgentSpec& agent_spec,
                      unsigned long long seed) {
  const MdpSpec mdp = build_instance(spec.instance, spec.num_episodes, seed);
  auto agent = build_agent(agent_spec, mdp, spec.num_episodes);
  Rng rng(seed);
  RunMetrics m = run_agent(mdp, *agent, spec.num_episodes, rng,
                           resolve_budget(agent_spec, mdp, spec.num_episodes));
  m.agent = agent_spec.label;
  m.seed = seed;
  return m;
}

nlohmann::json invariants_to_json(const InvariantCounters& c) {
  return {{"monotone_violations", c.monotone_violations},
          {"ordering_violations", c.ordering_violations},
          {"range_violations", c.range_violations},
          {"sigma_floor_violations", c.sigma_floor_violations},
          {"stability_checks", c.stability_checks},
          {"stability_violations", c.stability_violations},
          {"optimism_checks", c.optimism_checks},
          {"optimism_violations", c.optimism_violations},
          {"max_residual_ratio", c.max_residual_ratio}};
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const RunOptions& options) {
  struct Task {
    const AgentSpec* agent;
    unsigned long long seed;
  };
  std::vector<Task> tasks;
  for (const auto& a : spec.agents) {
    for (auto s : spec.seeds) tasks.push_back({&a, s + options.seed_offset});
  }

  std::vector<std::optional<RunMetrics>> results(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        results[i] = run_single(spec, *tasks[i].agent, tasks[i].seed);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  int workers = options.workers > 0 ? options.workers
                                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, static_cast<int>(tasks.size()));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  ExperimentResult out;
  out.output_dir = options.output_dir.empty() ? spec.output_dir : options.output_dir;
  if (out.output_dir.empty()) out.output_dir = "out";

  nlohmann::json runs = nlohmann::json::array();
  nlohmann::json failures = nlohmann::json::array();
  nlohmann::json aggregates = nlohmann::json::object();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const std::string& label = tasks[i].agent->label;
    if (!results[i]) {
      out.failures.push_back({label, tasks[i].seed, errors[i]});
      failures.push_back({{"label", label}, {"seed", tasks[i].seed}, {"error", errors[i]}});
      continue;
    }
    const RunMetrics& m = *results[i];
    runs.push_back({{"label", label},
                    {"seed", m.seed},
                    {"trace", trace_file_name(label, m.seed)},
                    {"final_regret", m.final_regret},
                    {"total_switches", m.total_switches},
                    {"switch_fires", m.switch_fires},
                    {"plan_calls", m.plan_calls},
                    {"var_k", m.var_k},
                    {"wall_seconds", m.wall_seconds},
                    {"invariants", invariants_to_json(m.invariants)}});
    out.runs.push_back(m);
  }

  for (const auto& a : spec.agents) {
    std::vector<double> finals;
    std::vector<int> switches;
    for (const auto& m : out.runs) {
      if (m.agent == a.label) {
        finals.push_back(m.final_regret);
        switches.push_back(m.total_switches);
      }
    }
    if (finals.empty()) continue;
    const double n = static_cast<double>(finals.size());
    double mean = 0.0;
    for (double f : finals) mean += f;
    mean /= n;
    double var = 0.0;
    for (double f : finals) var += (f - mean) * (f - mean);
    const double stderr_ = finals.size() > 1 ? std::sqrt(var / (n - 1.0) / n) : 0.0;
    double mean_sw = 0.0;
    for (int s : switches) mean_sw += s;
    aggregates[a.label] = {{"runs", finals.size()},
                           {"mean_final_regret", mean},
                           {"stderr_final_regret", stderr_},
                           {"mean_switches", mean_sw / n},
                           {"max_switches", *std::max_element(switches.begin(), switches.end())}};
  }

  nlohmann::json agents = nlohmann::json::array();
  for (const auto& a : spec.agents) {
    nlohmann::json entry = {{"label", a.label}, {"kind", to_string(a.kind)}};
    if (a.kind == AgentKind::kMqlUcb) entry["config"] = algo_config_to_json(a.algo);
    if (a.kind == AgentKind::kLsviUcb || a.kind == AgentKind::kLsviUcbDet) {
      entry["config"] = {{"lambda", a.baseline.lambda},
                         {"c_bonus", a.baseline.c_bonus},
                         {"refresh_period", a.baseline.refresh_period}};
    }
    if (a.budget_lower_bound) {
      entry["budget"] = "lower_bound";
    } else if (a.budget) {
      entry["budget"] = *a.budget;
    }
    agents.push_back(entry);
  }
  nlohmann::json seeds = nlohmann::json::array();
  for (auto s : spec.seeds) seeds.push_back(s + options.seed_offset);

  out.summary = {{"schema", kSummarySchema},
                 {"K", spec.num_episodes},
                 {"instance", spec.instance.raw},
                 {"seeds", seeds},
                 {"agents", agents},
                 {"runs", runs},
                 {"aggregates", aggregates},
                 {"failures", failures}};

  if (options.write_files) {
    std::filesystem::create_directories(out.output_dir);
    if (spec.emit_traces) {
      for (const auto& m : out.runs) {
        write_trace(out.output_dir / trace_file_name(m.agent, m.seed), m.rows);
      }
    }
    std::ofstream(out.output_dir / "summary.json") << out.summary.dump(2) << '\n';
  }
  return out;
}

}  // namespace mqlucb
