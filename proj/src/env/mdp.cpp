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

#include "mqlucb/env/mdp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mqlucb {

int sample_categorical(std::span<const double> probabilities, Rng& rng) {
  const double u = uniform01(rng);
  double acc = 0.0;
  int last_positive = 0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] <= 0.0) continue;
    acc += probabilities[i];
    last_positive = static_cast<int>(i);
    if (u < acc) return static_cast<int>(i);
  }
  // Rounding left u just above the accumulated mass.
  return last_positive;
}

InitialStateSchedule InitialStateSchedule::fixed(int state) {
  InitialStateSchedule s;
  s.mode_ = Mode::kFixed;
  s.fixed_state_ = state;
  return s;
}

InitialStateSchedule InitialStateSchedule::categorical(std::vector<double> probabilities) {
  InitialStateSchedule s;
  s.mode_ = Mode::kCategorical;
  s.probabilities_ = std::move(probabilities);
  return s;
}

InitialStateSchedule InitialStateSchedule::list(std::vector<int> states) {
  InitialStateSchedule s;
  s.mode_ = Mode::kList;
  s.states_ = std::move(states);
  return s;
}

int InitialStateSchedule::initial_state(int k, Rng& rng) const {
  switch (mode_) {
    case Mode::kFixed:
      return fixed_state_;
    case Mode::kCategorical:
      return sample_categorical(probabilities_, rng);
    case Mode::kList:
      if (k < 1 || static_cast<std::size_t>(k) > states_.size()) {
        throw std::out_of_range("initial state schedule has no entry for episode " +
                                std::to_string(k));
      }
      return states_[static_cast<std::size_t>(k - 1)];
  }
  return 0;
}

std::vector<int> InitialStateSchedule::support(int num_states) const {
  std::vector<char> seen(static_cast<std::size_t>(num_states), 0);
  auto mark = [&](int s) {
    if (s < 0 || s >= num_states) {
      throw std::invalid_argument("initial state " + std::to_string(s) + " out of range");
    }
    seen[static_cast<std::size_t>(s)] = 1;
  };
  switch (mode_) {
    case Mode::kFixed:
      mark(fixed_state_);
      break;
    case Mode::kCategorical:
      if (probabilities_.size() != static_cast<std::size_t>(num_states)) {
        throw std::invalid_argument("initial distribution must have one entry per state");
      }
      for (int s = 0; s < num_states; ++s) {
        if (probabilities_[static_cast<std::size_t>(s)] > 0.0) mark(s);
      }
      break;
    case Mode::kList:
      for (int s : states_) mark(s);
      break;
  }
  std::vector<int> out;
  for (int s = 0; s < num_states; ++s) {
    if (seen[static_cast<std::size_t>(s)]) out.push_back(s);
  }
  return out;
}

MdpSpec::MdpSpec(int num_states, int num_actions, int horizon, std::vector<double> transitions,
                 std::vector<double> rewards, InitialStateSchedule initial_states)
    : num_states_(num_states),
      num_actions_(num_actions),
      horizon_(horizon),
      transitions_(std::move(transitions)),
      rewards_(std::move(rewards)),
      initial_states_(std::move(initial_states)) {
  validate();
}

std::span<const double> MdpSpec::transition_row(int h, int s, int a) const {
  const auto offset =
      static_cast<std::size_t>(((h * num_states_ + s) * num_actions_ + a) * num_states_);
  return {transitions_.data() + offset, static_cast<std::size_t>(num_states_)};
}

void MdpSpec::validate() const {
  if (num_states_ < 1 || num_actions_ < 1 || horizon_ < 1) {
    throw std::invalid_argument("MDP needs at least one state, action and stage");
  }
  const auto sa = static_cast<std::size_t>(horizon_ * num_states_ * num_actions_);
  if (transitions_.size() != sa * static_cast<std::size_t>(num_states_)) {
    throw std::invalid_argument("transition tensor has wrong size");
  }
  if (rewards_.size() != sa) throw std::invalid_argument("reward tensor has wrong size");

  for (int h = 0; h < horizon_; ++h) {
    for (int s = 0; s < num_states_; ++s) {
      for (int a = 0; a < num_actions_; ++a) {
        double total = 0.0;
        for (double p : transition_row(h, s, a)) {
          if (!(p >= 0.0)) {
            throw std::invalid_argument("negative transition probability at h=" +
                                        std::to_string(h) + " s=" + std::to_string(s) +
                                        " a=" + std::to_string(a));
          }
          total += p;
        }
        if (std::abs(total - 1.0) > kRowTolerance) {
          throw std::invalid_argument("transition row does not sum to 1 at h=" +
                                      std::to_string(h) + " s=" + std::to_string(s) +
                                      " a=" + std::to_string(a));
        }
        const double r = reward(h, s, a);
        if (!(r >= 0.0 && r <= 1.0)) {
          throw std::invalid_argument("reward outside [0,1] at h=" + std::to_string(h) +
                                      " s=" + std::to_string(s) + " a=" + std::to_string(a));
        }
      }
    }
  }
  initial_states_.support(num_states_);
  if (max_total_reward() > 1.0 + kRowTolerance) {
    throw std::invalid_argument("a reachable trajectory collects total reward above 1");
  }
}

double MdpSpec::max_total_reward() const {
  const auto S = static_cast<std::size_t>(num_states_);
  // Forward reachability, then a backward max-reward DP restricted to it.
  std::vector<std::vector<char>> reachable(static_cast<std::size_t>(horizon_),
                                           std::vector<char>(S, 0));
  for (int s : initial_states_.support(num_states_)) reachable[0][static_cast<std::size_t>(s)] = 1;
  for (int h = 0; h + 1 < horizon_; ++h) {
    for (int s = 0; s < num_states_; ++s) {
      if (!reachable[static_cast<std::size_t>(h)][static_cast<std::size_t>(s)]) continue;
      for (int a = 0; a < num_actions_; ++a) {
        const auto row = transition_row(h, s, a);
        for (std::size_t n = 0; n < S; ++n) {
          if (row[n] > 0.0) reachable[static_cast<std::size_t>(h + 1)][n] = 1;
        }
      }
    }
  }
  std::vector<double> next(S, 0.0), cur(S, 0.0);
  for (int h = horizon_ - 1; h >= 0; --h) {
    for (int s = 0; s < num_states_; ++s) {
      double best = 0.0;
      for (int a = 0; a < num_actions_; ++a) {
        double tail = 0.0;
        const auto row = transition_row(h, s, a);
        for (std::size_t n = 0; n < S; ++n) {
          if (row[n] > 0.0) tail = std::max(tail, next[n]);
        }
        best = std::max(best, reward(h, s, a) + tail);
      }
      cur[static_cast<std::size_t>(s)] =
          reachable[static_cast<std::size_t>(h)][static_cast<std::size_t>(s)] ? best : 0.0;
    }
    std::swap(cur, next);
  }
  double out = 0.0;
  for (double v : next) out = std::max(out, v);
  return out;
}

Policy::Policy(int horizon, int num_states, int num_actions, std::vector<double> probs)
    : horizon_(horizon), num_states_(num_states), num_actions_(num_actions), probs_(std::move(probs)) {}

Policy Policy::deterministic(int horizon, int num_states, int num_actions,
                             std::span<const int> actions) {
  if (actions.size() != static_cast<std::size_t>(horizon * num_states)) {
    throw std::invalid_argument("deterministic policy needs one action per (h, s)");
  }
  std::vector<double> probs(static_cast<std::size_t>(horizon * num_states * num_actions), 0.0);
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const int a = actions[i];
    if (a < 0 || a >= num_actions) throw std::invalid_argument("policy action out of range");
    probs[i * static_cast<std::size_t>(num_actions) + static_cast<std::size_t>(a)] = 1.0;
  }
  return Policy(horizon, num_states, num_actions, std::move(probs));
}

Policy Policy::uniform(int horizon, int num_states, int num_actions) {
  return Policy(horizon, num_states, num_actions,
                std::vector<double>(static_cast<std::size_t>(horizon * num_states * num_actions),
                                    1.0 / num_actions));
}

std::span<const double> Policy::distribution(int h, int s) const {
  return {probs_.data() + static_cast<std::size_t>((h * num_states_ + s) * num_actions_),
          static_cast<std::size_t>(num_actions_)};
}

int Policy::sample(int h, int s, Rng& rng) const {
  const auto dist = distribution(h, s);
  for (std::size_t a = 0; a < dist.size(); ++a) {
    if (dist[a] == 1.0) return static_cast<int>(a);  // no draw for deterministic rows
  }
  return sample_categorical(dist, rng);
}

double Trajectory::total_reward() const {
  double total = 0.0;
  for (const auto& step : steps) total += step.reward;
  return total;
}

Trajectory simulate_episode(const MdpSpec& mdp, const Policy& policy, int k, Rng& rng) {
  Trajectory traj;
  traj.episode = k;
  traj.steps.reserve(static_cast<std::size_t>(mdp.horizon()));
  int s = mdp.initial_states().initial_state(k, rng);
  for (int h = 0; h < mdp.horizon(); ++h) {
    const int a = policy.sample(h, s, rng);
    const int next = sample_categorical(mdp.transition_row(h, s, a), rng);
    traj.steps.push_back({h, s, a, mdp.reward(h, s, a), next});
    s = next;
  }
  return traj;
}

}  // namespace mqlucb
