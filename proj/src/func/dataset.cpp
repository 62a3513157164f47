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

#include "mqlucb/func/dataset.hpp"

#include <stdexcept>

namespace mqlucb {

namespace {

WeightedTarget make_row(TargetKind kind, int point, double reward, double next_value,
                        double weight, double count) {
  const double y = reward + next_value;
  switch (kind) {
    case TargetKind::kOptimistic:
    case TargetKind::kPessimistic:
      return {point, weight, y};
    case TargetKind::kSquared:
      return {point, count, y * y};
  }
  return {point, 0.0, 0.0};
}

double next_value_at(std::span<const double> next_values, int s) {
  if (s < 0 || static_cast<std::size_t>(s) >= next_values.size()) {
    throw std::out_of_range("next state outside the value vector");
  }
  return next_values[static_cast<std::size_t>(s)];
}

}  // namespace

void StageDataset::append(const StageEntry& e) {
  if (!(e.sigma_bar > 0.0) || e.sigma_bar < sigma_floor_) {
    throw std::invalid_argument("sigma_bar below the dataset floor");
  }
  const long long key = (static_cast<long long>(e.point) << 32) | static_cast<unsigned>(e.next_state);
  auto [it, inserted] = group_index_.try_emplace(key, groups_.size());
  if (inserted) {
    groups_.push_back({e.point, e.next_state, e.reward, 0.0, 0.0});
  } else if (groups_[it->second].reward != e.reward) {
    throw std::invalid_argument("reward differs between observations of the same (s, a)");
  }
  Group& g = groups_[it->second];
  g.weight += 1.0 / (e.sigma_bar * e.sigma_bar);
  g.count += 1.0;
  entries_.push_back(e);
}

std::vector<WeightedTarget> StageDataset::problem(TargetKind kind,
                                                  std::span<const double> next_values) const {
  std::vector<WeightedTarget> rows;
  rows.reserve(groups_.size());
  for (const auto& g : groups_) {
    rows.push_back(make_row(kind, g.point, g.reward, next_value_at(next_values, g.next_state),
                            g.weight, g.count));
  }
  return rows;
}

FitResult fit_weighted_ls(const FunctionClass& cls, const StageDataset& data, TargetKind kind,
                          std::span<const double> next_values, double lambda) {
  if (data.empty()) return {Regressor::zero(cls.domain_size()), 0.0};
  const auto rows = data.problem(kind, next_values);
  return cls.fit(rows, lambda);
}

namespace reference {

std::vector<WeightedTarget> problem_per_entry(const StageDataset& data, TargetKind kind,
                                              std::span<const double> next_values) {
  std::vector<WeightedTarget> rows;
  for (const auto& e : data.entries()) {
    rows.push_back(make_row(kind, e.point, e.reward, next_value_at(next_values, e.next_state),
                            1.0 / (e.sigma_bar * e.sigma_bar), 1.0));
  }
  return rows;
}

}  // namespace reference
}  // namespace mqlucb
