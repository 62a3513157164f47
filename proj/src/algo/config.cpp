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

#include "mqlucb/algo/config.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mqlucb {

namespace {

double clipped_log(double x) { return x > 1.0 ? std::log(x) : 0.0; }

}  // namespace

double resolved_alpha(const AlgoConfig& cfg, const ScheduleContext& ctx) {
  if (cfg.alpha > 0.0) return cfg.alpha;
  return 1.0 / std::sqrt(static_cast<double>(ctx.num_episodes) * ctx.horizon);
}

double resolved_cover_eps(const AlgoConfig& cfg, const ScheduleContext& ctx) {
  if (cfg.cover_eps > 0.0) return cfg.cover_eps;
  return 1.0 / (static_cast<double>(ctx.num_episodes) * cfg.range_bound * ctx.horizon);
}

AlgoConfig calibrated_practical_config() {
  AlgoConfig cfg;
  cfg.c_bonus = 0.45;
  cfg.c_hoeffding = 0.005;
  cfg.c_second = 0.005;
  cfg.gamma = 0.25;
  cfg.variance_log_factor = 0.05;
  return cfg;
}

void validate(const AlgoConfig& cfg) {
  if (!(cfg.lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  if (!(cfg.chi > 0.0)) throw std::invalid_argument("chi must be positive");
  if (!(cfg.range_bound > 0.0)) throw std::invalid_argument("range_bound must be positive");
  if (cfg.gamma < 0.0) throw std::invalid_argument("gamma must be nonnegative");
  if (cfg.c_bonus < 0.0 || cfg.c_hoeffding < 0.0 || cfg.c_second < 0.0) {
    throw std::invalid_argument("schedule constants must be nonnegative");
  }
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  if (cfg.bonus_ratio < 1.0) throw std::invalid_argument("bonus_ratio must be >= 1");
  if (cfg.refresh_period < 1) throw std::invalid_argument("refresh_period must be >= 1");
  if (cfg.stability_probes < 0) throw std::invalid_argument("stability_probes must be >= 0");
}

BetaSchedule practical_beta(const AlgoConfig& cfg, const ScheduleContext& ctx, int k) {
  const double base = std::sqrt(ctx.complexity * std::log1p(static_cast<double>(k)));
  return {cfg.c_bonus * base, cfg.c_hoeffding * base, cfg.c_second * base, cfg.gamma,
          cfg.variance_log_factor};
}

double theory_bonus_radius_sq(double log_term, double log_cover_f, double lambda, double eps,
                              int k, double range_bound, double alpha) {
  return log_term * (log_cover_f + 1.0) + lambda + eps * k * range_bound / (alpha * alpha);
}

BetaSchedule theory_beta(const AlgoConfig& cfg, const ScheduleContext& ctx, int k) {
  const double L = cfg.range_bound;
  const double alpha = resolved_alpha(cfg, ctx);
  const double eps = resolved_cover_eps(cfg, ctx);
  const double H = ctx.horizon;
  const double K = ctx.num_episodes;
  const double kk = k;

  const double peel = (2.0 * clipped_log(L * L * kk / std::pow(alpha, 4)) + 2.0) *
                      (clipped_log(4.0 * L / (alpha * alpha)) + 2.0);
  const double bonus_log = clipped_log(2.0 * kk * kk * peel * H / cfg.delta);
  const double bonus = std::sqrt(
      theory_bonus_radius_sq(bonus_log, cfg.log_cover_f, cfg.lambda, eps, k, L, alpha));

  const double log_n_eps = (ctx.switches + 1.0) * (cfg.log_cover_f + cfg.log_cover_bonus);
  const double union_log = std::max(0.0, log_n_eps + cfg.log_cover_f + std::log(H / cfg.delta));
  const double hoeffding = std::sqrt(128.0 * union_log + 64.0 * L * eps * kk / (alpha * alpha));
  const double second = std::sqrt(128.0 * union_log + 64.0 * L * eps * kk);

  const double peel_K = (2.0 * clipped_log(L * L * K / std::pow(alpha, 4)) + 2.0) *
                        (clipped_log(4.0 * L / (alpha * alpha)) + 2.0);
  const double gamma_sq = std::max(
      0.0, std::log(2.0 * H * K * K * peel_K / cfg.delta) + 4.0 * cfg.log_cover_f + 2.0 * log_n_eps);

  return {bonus, hoeffding, second, std::sqrt(gamma_sq), cfg.log_cover_f + log_n_eps};
}

BetaSchedule beta_schedule(const AlgoConfig& cfg, const ScheduleContext& ctx, int k) {
  return cfg.mode == BetaMode::kTheory ? theory_beta(cfg, ctx, k) : practical_beta(cfg, ctx, k);
}

}  // namespace mqlucb
