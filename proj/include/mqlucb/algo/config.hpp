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

namespace mqlucb {

enum class BetaMode { kPractical, kTheory };

/// Knobs of the MQL-UCB learner.
struct AlgoConfig {
  double lambda = 1.0;
  /// Weight floor alpha; <= 0 selects 1/sqrt(K H).
  double alpha = 0.0;
  /// Uncertainty-weight coefficient gamma (practical mode only; theory mode
  /// derives it from the covering proxies).
  double gamma = 1.0;
  /// Switching threshold chi.
  double chi = 1.0;
  /// Range bound L of the function class.
  double range_bound = 1.0;
  BetaMode mode = BetaMode::kPractical;

  // Practical schedules: beta = c * sqrt(complexity * log(1 + k)).
  double c_bonus = 0.5;       // beta_hat = beta_check
  double c_hoeffding = 0.5;   // beta
  double c_second = 0.5;      // beta_tilde
  /// Multiplier of the F channel in practical mode.
  double variance_log_factor = 1.0;

  // Covering proxies consumed by theory mode.
  double log_cover_f = 1.0;
  double log_cover_bonus = 1.0;
  double cover_eps = 0.0;  // <= 0 selects 1/(K L H)
  double delta = 0.01;

  /// Bonus oracle ratio C; the exact oracles here have C = 1.
  double bonus_ratio = 1.0;

  int refresh_period = 256;
  /// Random probes per episode for the rare-switching stability check
  /// (linear classes only); 0 disables it.
  int stability_probes = 100;
  /// Seed of the probe generator (kept apart from the episode rng).
  unsigned long long probe_seed = 0x5eedULL;
};

/// Confidence radii for one episode.
struct BetaSchedule {
  double bonus;      // beta_hat_k = beta_check_k
  double hoeffding;  // beta_k
  double second;     // beta_tilde_k
  double gamma;
  double variance_log_factor;  // multiplier of F_{k,h}
};

/// Run-level quantities the schedules depend on.
struct ScheduleContext {
  double complexity = 1.0;  // d for linear classes
  int horizon = 1;
  int num_episodes = 1;     // K
  int switches = 0;         // l_k, enters the theory-mode covering number
};

double resolved_alpha(const AlgoConfig& cfg, const ScheduleContext& ctx);
double resolved_cover_eps(const AlgoConfig& cfg, const ScheduleContext& ctx);

/// Dispatches on cfg.mode.
BetaSchedule beta_schedule(const AlgoConfig& cfg, const ScheduleContext& ctx, int k);

BetaSchedule practical_beta(const AlgoConfig& cfg, const ScheduleContext& ctx, int k);

/// Theory-mode schedules with every O(.) constant set to 1 and covering
/// numbers replaced by the configured log proxies:
///   beta_hat^2 = log(2k^2 (2 log(L^2 k / alpha^4) + 2)(log(4L / alpha^2) + 2) H / delta)
///                * (log N_F + 1) + lambda + eps k L / alpha^2
///   beta^2       = 128 log(N_eps(k) N_F H / delta) + 64 L eps k / alpha^2
///   beta_tilde^2 = 128 log(N_eps(k) N_F H / delta) + 64 L eps k
///   gamma^2      = log(2 H K^2 (2 log(L^2 K / alpha^4) + 2)(log(4L / alpha^2) + 2)
///                      N_F^4 N_eps(K)^2 / delta)
/// with log N_eps(k) = (l_k + 1)(log N_F + log N_B). Log terms are clipped at 0.
BetaSchedule theory_beta(const AlgoConfig& cfg, const ScheduleContext& ctx, int k);

/// beta_hat^2 from its parts: log_term * (log N_F + 1) + lambda + eps k L / alpha^2.
double theory_bonus_radius_sq(double log_term, double log_cover_f, double lambda, double eps,
                              int k, double range_bound, double alpha);

/// Practical-mode constants tuned on the one-hot 4x3x3 and hard-instance
/// benchmarks: c_bonus = 0.45, c_hoeffding = c_second = 0.005, gamma = 0.25,
/// variance_log_factor = 0.05. With empty data Q = beta_hat_1 on one-hot
/// features, so c_bonus * sqrt(d log 2) must reach 1 or the min-stack keeps
/// an under-estimate forever; 0.45 covers d >= 8.
AlgoConfig calibrated_practical_config();

/// Throws std::invalid_argument on alpha/chi/lambda out of range.
void validate(const AlgoConfig& cfg);

}  // namespace mqlucb
