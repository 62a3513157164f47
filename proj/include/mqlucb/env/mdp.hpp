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

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace mqlucb {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Samples an index from a probability vector (assumed normalized).
int sample_categorical(std::span<const double> probabilities, Rng& rng);

// Stages are 0-based (h = 0..H-1) throughout the code base; episodes are
// 1-based (k = 1..K) to match trace rows.

/// How the initial state s_1^k of episode k is chosen.
class InitialStateSchedule {
 public:
  enum class Mode { kFixed, kCategorical, kList };

  static InitialStateSchedule fixed(int state);
  static InitialStateSchedule categorical(std::vector<double> probabilities);
  /// Adversarial per-episode list: episode k starts in states[k-1].
  static InitialStateSchedule list(std::vector<int> states);

  Mode mode() const { return mode_; }
  int fixed_state() const { return fixed_state_; }
  const std::vector<double>& probabilities() const { return probabilities_; }
  const std::vector<int>& states() const { return states_; }

  /// Throws std::out_of_range if a list schedule has no entry for episode k.
  int initial_state(int k, Rng& rng) const;

  /// States that can appear as s_1 under this schedule.
  std::vector<int> support(int num_states) const;

 private:
  Mode mode_ = Mode::kFixed;
  int fixed_state_ = 0;
  std::vector<double> probabilities_;
  std::vector<int> states_;
};

/// Finite time-inhomogeneous episodic MDP with deterministic rewards.
///
/// Construction validates every transition row (nonnegative, sums to one
/// within 1e-12), every reward (in [0, 1]) and the total-reward bound: the
/// largest reward sum collectable along any reachable trajectory is at most
/// one. Invalid instances are rejected with std::invalid_argument.
class MdpSpec {
 public:
  static constexpr double kRowTolerance = 1e-12;

  /// transitions is indexed [h][s][a][s'] flattened; rewards [h][s][a].
  MdpSpec(int num_states, int num_actions, int horizon,
          std::vector<double> transitions, std::vector<double> rewards,
          InitialStateSchedule initial_states);

  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }
  int horizon() const { return horizon_; }
  int num_pairs() const { return num_states_ * num_actions_; }

  /// Index of the state-action pair (s, a) in [0, |S||A|).
  int pair_index(int s, int a) const { return s * num_actions_ + a; }

  std::span<const double> transition_row(int h, int s, int a) const;
  double transition(int h, int s, int a, int next) const {
    return transition_row(h, s, a)[static_cast<std::size_t>(next)];
  }
  double reward(int h, int s, int a) const {
    return rewards_[static_cast<std::size_t>((h * num_states_ + s) * num_actions_ + a)];
  }

  const std::vector<double>& transitions() const { return transitions_; }
  const std::vector<double>& rewards() const { return rewards_; }
  const InitialStateSchedule& initial_states() const { return initial_states_; }

  /// Largest total reward along trajectories reachable from the initial support.
  double max_total_reward() const;

  /// Re-runs the construction checks; throws std::invalid_argument.
  void validate() const;

 private:

  int num_states_;
  int num_actions_;
  int horizon_;
  std::vector<double> transitions_;
  std::vector<double> rewards_;
  InitialStateSchedule initial_states_;
};

/// Stagewise Markov policy: an action distribution for every (h, s).
class Policy {
 public:
  static Policy deterministic(int horizon, int num_states, int num_actions,
                              std::span<const int> actions);
  static Policy uniform(int horizon, int num_states, int num_actions);

  int horizon() const { return horizon_; }
  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }

  double probability(int h, int s, int a) const {
    return probs_[static_cast<std::size_t>((h * num_states_ + s) * num_actions_ + a)];
  }
  std::span<const double> distribution(int h, int s) const;
  int sample(int h, int s, Rng& rng) const;

 private:
  Policy(int horizon, int num_states, int num_actions, std::vector<double> probs);

  int horizon_;
  int num_states_;
  int num_actions_;
  std::vector<double> probs_;
};

struct TrajectoryStep {
  int stage;
  int state;
  int action;
  double reward;
  int next_state;
};

struct Trajectory {
  int episode = 0;
  std::vector<TrajectoryStep> steps;

  double total_reward() const;
};

/// Rolls out one episode. The initial state comes from the MDP's schedule.
Trajectory simulate_episode(const MdpSpec& mdp, const Policy& policy, int k, Rng& rng);

}  // namespace mqlucb
