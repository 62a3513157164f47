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

#include "mqlucb/algo/qstack.hpp"

#include <algorithm>
#include <stdexcept>

namespace mqlucb {

namespace {

double clip01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

QStack::QStack(int num_states, int num_actions)
    : num_states_(num_states),
      num_actions_(num_actions),
      q_(static_cast<std::size_t>(num_states * num_actions), 1.0),
      q_check_(static_cast<std::size_t>(num_states * num_actions), 0.0) {}

void QStack::push(QSnapshot snap) {
  const int n = num_states_ * num_actions_;
  if (snap.optimistic.domain_size() != n || snap.pessimistic.domain_size() != n ||
      snap.d_bar.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("snapshot does not cover the state-action domain");
  }
  for (int z = 0; z < n; ++z) {
    auto& q = q_[static_cast<std::size_t>(z)];
    auto& qc = q_check_[static_cast<std::size_t>(z)];
    q = clip01(std::min(q, snap.upper(z)));
    qc = clip01(std::max(qc, snap.lower(z)));
  }
  snapshots_.push_back(std::move(snap));
}

std::vector<double> QStack::values() const {
  std::vector<double> v(static_cast<std::size_t>(num_states_));
  for (int s = 0; s < num_states_; ++s) {
    const auto begin = q_.begin() + s * num_actions_;
    v[static_cast<std::size_t>(s)] = *std::max_element(begin, begin + num_actions_);
  }
  return v;
}

std::vector<double> QStack::check_values() const {
  std::vector<double> v(static_cast<std::size_t>(num_states_));
  for (int s = 0; s < num_states_; ++s) {
    const auto begin = q_check_.begin() + s * num_actions_;
    v[static_cast<std::size_t>(s)] = *std::max_element(begin, begin + num_actions_);
  }
  return v;
}

int QStack::act(int s) const {
  const auto begin = q_.begin() + s * num_actions_;
  // max_element returns the first maximum, i.e. the lowest action index.
  return static_cast<int>(std::max_element(begin, begin + num_actions_) - begin);
}

double QStack::q_from_snapshots(int z) const {
  double q = 1.0;
  for (const auto& snap : snapshots_) q = std::min(q, snap.upper(z));
  return clip01(q);
}

double QStack::q_check_from_snapshots(int z) const {
  double q = 0.0;
  for (const auto& snap : snapshots_) q = std::max(q, snap.lower(z));
  return clip01(q);
}

}  // namespace mqlucb
