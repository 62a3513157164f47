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

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mqlucb/algo/agent.hpp"
#include "mqlucb/algo/metrics.hpp"
#include "mqlucb/bench/experiment_spec.hpp"

namespace mqlucb {

inline constexpr const char* kSummarySchema = "summary/v1";

struct RunOptions {
  unsigned long long seed_offset = 0;
  /// 0 selects std::thread::hardware_concurrency().
  int workers = 0;
  /// Overrides the spec's output_dir when nonempty.
  std::filesystem::path output_dir;
  bool write_files = true;
};

struct RunFailure {
  std::string label;
  unsigned long long seed = 0;
  std::string error;
};

struct ExperimentResult {
  std::vector<RunMetrics> runs;  // successful runs, agent-major then seed order
  std::vector<RunFailure> failures;
  nlohmann::json summary;
  std::filesystem::path output_dir;
};

/// Instance for one run. A fixed instance seed wins over the run seed.
MdpSpec build_instance(const InstanceSpec& spec, int num_episodes, unsigned long long run_seed);

/// The agent keeps a reference to mdp, which must outlive it.
std::unique_ptr<Agent> build_agent(const AgentSpec& spec, const MdpSpec& mdp, int num_episodes);

/// floor(d H / (16 ln K)) with d = |S||A|.
int lower_bound_budget(const MdpSpec& mdp, int num_episodes);
std::optional<int> resolve_budget(const AgentSpec& spec, const MdpSpec& mdp, int num_episodes);

/// One (agent, seed) run; seed already includes any offset.
RunMetrics run_single(const ExperimentSpec& spec, const AgentSpec& agent, unsigned long long seed);

/// Runs |agents| x |seeds| independent tasks on a bounded worker pool, then
/// writes one trace per run and summary.json. A failing run is recorded and
/// does not stop the others.
ExperimentResult run_experiment(const ExperimentSpec& spec, const RunOptions& options = {});

nlohmann::json invariants_to_json(const InvariantCounters& c);

}  // namespace mqlucb
