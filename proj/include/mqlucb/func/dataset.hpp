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

#include <span>
#include <unordered_map>
#include <vector>

#include "mqlucb/func/function_class.hpp"

namespace mqlucb {

/// One observation at a fixed stage: point z = (s, a), reward, next state and
/// the regression weight sigma_bar fixed at collection time.
struct StageEntry {
  int point;
  int next_state;
  double reward;
  double sigma_bar;
};

enum class TargetKind {
  kOptimistic,   // r + V(s'), weights 1/sigma_bar^2
  kPessimistic,  // r + V_check(s'), weights 1/sigma_bar^2
  kSquared,      // (r + V(s'))^2, unit weights
};

/// Append-only per-stage history.
///
/// Besides the raw entries it keeps sums grouped by (z, s'): the targets of a
/// group depend on the next-stage values only through V(s'), so every
/// regression over the history collapses to one row per group. Rewards are
/// deterministic functions of (h, s, a); an entry whose reward disagrees with
/// its group is rejected.
class StageDataset {
 public:
  struct Group {
    int point;
    int next_state;
    double reward;
    double weight;  // sum of 1/sigma_bar^2
    double count;
  };

  explicit StageDataset(double sigma_floor = 0.0) : sigma_floor_(sigma_floor) {}

  void append(const StageEntry& entry);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const StageEntry> entries() const { return entries_; }
  std::span<const Group> groups() const { return groups_; }

  /// Regression rows for the given target against next-stage values V(s').
  std::vector<WeightedTarget> problem(TargetKind kind, std::span<const double> next_values) const;

 private:
  double sigma_floor_;
  std::vector<StageEntry> entries_;
  std::vector<Group> groups_;
  std::unordered_map<long long, std::size_t> group_index_;
};

/// Weighted least squares over the history. An empty dataset yields the
/// zero regressor.
FitResult fit_weighted_ls(const FunctionClass& cls, const StageDataset& data, TargetKind kind,
                          std::span<const double> next_values, double lambda);

namespace reference {

/// One row per raw entry; the serial reference for StageDataset::problem.
std::vector<WeightedTarget> problem_per_entry(const StageDataset& data, TargetKind kind,
                                              std::span<const double> next_values);

}  // namespace reference
}  // namespace mqlucb
