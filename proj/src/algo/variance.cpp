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

#include "mqlucb/algo/variance.hpp"

#include <algorithm>
#include <cmath>

namespace mqlucb {

VarianceRecord estimate_variance(const VarianceInputs& in, const BetaSchedule& beta, double alpha,
                                 double range_bound) {
  VarianceRecord r{};
  const double d_bar = std::max(0.0, in.d_bar);
  r.variance_estimate = std::max(0.0, in.f_tilde - in.f_hat * in.f_hat);
  r.e_bonus = (2.0 * range_bound * beta.hoeffding + beta.second) * std::min(1.0, d_bar);
  const double gap = 2.0 * in.f_hat - 2.0 * in.f_check + 4.0 * beta.hoeffding * d_bar;
  r.f_bonus = std::max(0.0, beta.variance_log_factor * std::min(1.0, gap));
  r.sigma = std::sqrt(std::max(0.0, r.variance_estimate + r.e_bonus + r.f_bonus));
  r.sigma_bar = std::max({r.sigma, alpha, beta.gamma * std::sqrt(d_bar)});
  return r;
}

}  // namespace mqlucb
