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

#include "mqlucb/bench/compare.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "mqlucb/bench/trace_io.hpp"

namespace mqlucb {

namespace {

Checkpoint summarize(int k, const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= n;
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  return {k, mean, xs.size() > 1 ? std::sqrt(var / (n - 1.0) / n) : 0.0};
}

}  // namespace

double sublinearity_ratio(std::span<const EpisodeRow> rows) {
  if (rows.empty()) return 0.0;
  const int K = static_cast<int>(rows.size());
  const double full = rows.back().cum_regret;
  const double half = rows[static_cast<std::size_t>(std::max(1, K / 2) - 1)].cum_regret;
  if (half == 0.0) return full == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return (full - half) / half;
}

Comparison compare_regret(std::span<const TraceSet> sets) {
  if (sets.size() < 2) throw GridMismatchError("need at least two trace sets");
  Comparison c;
  const TraceSet& first = sets.front();
  if (first.runs.empty()) throw GridMismatchError(first.label + ": no runs");
  c.num_episodes = static_cast<int>(first.runs.begin()->second.size());
  for (const auto& [seed, _] : first.runs) c.seeds.push_back(seed);
  if (c.num_episodes < 1) throw GridMismatchError(first.label + ": empty trace");

  for (const auto& set : sets) {
    if (set.runs.size() != c.seeds.size()) {
      throw GridMismatchError(set.label + ": seed list differs from " + first.label);
    }
    for (const auto& [seed, rows] : set.runs) {
      if (!first.runs.contains(seed)) {
        throw GridMismatchError(set.label + ": seed " + std::to_string(seed) + " missing from " +
                                first.label);
      }
      if (static_cast<int>(rows.size()) != c.num_episodes) {
        throw GridMismatchError(set.label + " seed " + std::to_string(seed) + ": K differs");
      }
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].k != static_cast<int>(i) + 1) {
          throw GridMismatchError(set.label + " seed " + std::to_string(seed) +
                                  ": rows do not cover k = 1..K");
        }
      }
    }
  }

  const int K = c.num_episodes;
  const int marks[] = {std::max(1, K / 4), std::max(1, K / 2), K};
  for (const auto& set : sets) {
    ComparisonRow row;
    row.label = set.label;
    for (int k : marks) {
      std::vector<double> xs;
      for (const auto& [_, rows] : set.runs) xs.push_back(rows[static_cast<std::size_t>(k - 1)].cum_regret);
      row.checkpoints.push_back(summarize(k, xs));
    }
    row.min_switches = std::numeric_limits<int>::max();
    double sub = 0.0;
    for (const auto& [_, rows] : set.runs) {
      const int s = rows.back().switches;
      row.mean_switches += s;
      row.min_switches = std::min(row.min_switches, s);
      row.max_switches = std::max(row.max_switches, s);
      sub += sublinearity_ratio(rows);
    }
    row.mean_switches /= static_cast<double>(set.runs.size());
    row.sublinearity = sub / static_cast<double>(set.runs.size());
    c.rows.push_back(std::move(row));
  }
  return c;
}

std::vector<TraceSet> load_trace_dirs(std::span<const std::filesystem::path> dirs) {
  std::map<std::string, std::map<std::string, TraceSet>> by_label;  // label -> dir -> set
  for (const auto& dir : dirs) {
    if (!std::filesystem::is_directory(dir)) throw std::runtime_error(dir.string() + " is not a directory");
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      std::string label;
      unsigned long long seed = 0;
      if (!parse_trace_file_name(file.filename().string(), label, seed)) continue;
      TraceSet& set = by_label[label][dir.string()];
      set.label = label;
      set.runs[seed] = read_trace(file);
    }
  }
  std::vector<TraceSet> out;
  for (auto& [label, per_dir] : by_label) {
    for (auto& [dir, set] : per_dir) {
      if (per_dir.size() > 1) {
        const std::filesystem::path p(dir);
        const std::string name =
            p.filename().empty() ? p.parent_path().filename().string() : p.filename().string();
        set.label = name + "/" + label;
      }
      out.push_back(std::move(set));
    }
  }
  return out;
}

std::string format_comparison(const Comparison& c) {
  std::string out;
  char buf[512];
  std::snprintf(buf, sizeof buf, "K=%d seeds=%zu\n", c.num_episodes, c.seeds.size());
  out += buf;
  std::snprintf(buf, sizeof buf, "%-24s %22s %22s %22s %10s %8s %8s\n", "agent", "R(K/4)", "R(K/2)",
                "R(K)", "switches", "sw.max", "sublin");
  out += buf;
  for (const auto& r : c.rows) {
    std::snprintf(buf, sizeof buf, "%-24s", r.label.c_str());
    out += buf;
    for (const auto& cp : r.checkpoints) {
      std::snprintf(buf, sizeof buf, " %12.3f +- %7.3f", cp.mean, cp.stderr_);
      out += buf;
    }
    std::snprintf(buf, sizeof buf, " %10.1f %8d %8.3f\n", r.mean_switches, r.max_switches, r.sublinearity);
    out += buf;
  }
  return out;
}

nlohmann::json comparison_to_json(const Comparison& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : c.rows) {
    nlohmann::json cps = nlohmann::json::array();
    for (const auto& cp : r.checkpoints) cps.push_back({{"k", cp.k}, {"mean", cp.mean}, {"stderr", cp.stderr_}});
    rows.push_back({{"label", r.label},
                    {"checkpoints", cps},
                    {"mean_switches", r.mean_switches},
                    {"min_switches", r.min_switches},
                    {"max_switches", r.max_switches},
                    {"sublinearity", r.sublinearity}});
  }
  return {{"K", c.num_episodes}, {"seeds", c.seeds}, {"rows", rows}};
}

}  // namespace mqlucb
