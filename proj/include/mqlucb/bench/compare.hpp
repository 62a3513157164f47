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
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mqlucb/algo/metrics.hpp"

namespace mqlucb {

/// All runs of one agent label, keyed by seed.
struct TraceSet {
  std::string label;
  std::map<unsigned long long, std::vector<EpisodeRow>> runs;
};

class GridMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Checkpoint {
  int k = 0;
  double mean = 0.0;
  double stderr_ = 0.0;
};

struct ComparisonRow {
  std::string label;
  std::vector<Checkpoint> checkpoints;  // K/4, K/2, K
  double mean_switches = 0.0;
  int min_switches = 0;
  int max_switches = 0;
  /// Seed average of (R(K) - R(K/2)) / R(K/2); 0 when both are 0.
  double sublinearity = 0.0;
};

struct Comparison {
  int num_episodes = 0;
  std::vector<unsigned long long> seeds;
  std::vector<ComparisonRow> rows;
};

/// (R(K) - R(K/2)) / R(K/2) for one run.
double sublinearity_ratio(std::span<const EpisodeRow> rows);

/// Requires every set to cover the same seeds with traces of the same length
/// K whose rows are k = 1..K; throws GridMismatchError otherwise.
Comparison compare_regret(std::span<const TraceSet> sets);

/// Groups "<label>__seed<N>.csv" files. A label found in more than one
/// directory is qualified as "<dir name>/<label>".
std::vector<TraceSet> load_trace_dirs(std::span<const std::filesystem::path> dirs);

std::string format_comparison(const Comparison& c);
nlohmann::json comparison_to_json(const Comparison& c);

}  // namespace mqlucb
