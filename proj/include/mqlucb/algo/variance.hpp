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

#include "mqlucb/algo/config.hpp"

namespace mqlucb {

/// Regressor outputs and current uncertainty at the visited point.
struct VarianceInputs {
  double f_hat;
  double f_check;
  double f_tilde;
  double d_bar;  // sqrt of D^2 against the current (not frozen) statistics
};

struct VarianceRecord {
  double variance_estimate;  // clip0(f_tilde - f_hat^2)
  double e_bonus;            // (2 L beta + beta_tilde) min(1, d_bar)
  double f_bonus;            // log-factor * min(1, 2 f_hat - 2 f_check + 4 beta d_bar), >= 0
  double sigma;              // sqrt(variance + E + F)
  double sigma_bar;          // max(sigma, alpha, gamma sqrt(d_bar))
};

VarianceRecord estimate_variance(const VarianceInputs& in, const BetaSchedule& beta, double alpha,
                                 double range_bound);

}  // namespace mqlucb
