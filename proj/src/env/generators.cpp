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

#include "mqlucb/env/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mqlucb {

MdpSpec make_chain2() {
  constexpr int S = 2, A = 2, H = 2;
  std::vector<double> p(S * A * H * S, 0.0);
  std::vector<double> r(S * A * H, 0.0);
  auto set = [&](int h, int s, int a, int next) { p[((h * S + s) * A + a) * S + next] = 1.0; };
  for (int h = 0; h < H; ++h) {
    set(h, 0, 0, 1);
    set(h, 0, 1, 0);
    set(h, 1, 0, 1);
    set(h, 1, 1, 1);
  }
  r[(1 * S + 1) * A + 0] = 1.0;
  return MdpSpec(S, A, H, std::move(p), std::move(r), InitialStateSchedule::fixed(0));
}

MdpSpec make_two_outcome(double prob) {
  if (!(prob >= 0.0 && prob <= 1.0)) throw std::invalid_argument("probability out of range");
  constexpr int S = 2, A = 1, H = 2;
  std::vector<double> p(S * A * H * S, 0.0);
  for (int h = 0; h < H; ++h) {
    p[((h * S + 0) * A) * S + 0] = 1.0 - prob;
    p[((h * S + 0) * A) * S + 1] = prob;
    p[((h * S + 1) * A) * S + 1] = 1.0;
  }
  return MdpSpec(S, A, H, std::move(p), std::vector<double>(S * A * H, 0.0),
                 InitialStateSchedule::fixed(0));
}

MdpSpec make_random_mdp(const RandomMdpOptions& o, Rng& rng) {
  if (o.num_states < 1 || o.num_actions < 1 || o.horizon < 1 || !(o.concentration > 0.0)) {
    throw std::invalid_argument("invalid random MDP options");
  }
  const int S = o.num_states, A = o.num_actions, H = o.horizon;
  const double scale = o.reward_scale > 0.0 ? o.reward_scale : 1.0 / H;
  if (scale * H > 1.0 + 1e-12) throw std::invalid_argument("reward_scale * H exceeds 1");

  std::gamma_distribution<double> gamma(o.concentration, 1.0);
  std::vector<double> p(static_cast<std::size_t>(H * S * A * S));
  std::vector<double> r(static_cast<std::size_t>(H * S * A));
  for (std::size_t row = 0; row < r.size(); ++row) {
    double total = 0.0;
    for (int n = 0; n < S; ++n) {
      const double g = gamma(rng);
      p[row * S + n] = g;
      total += g;
    }
    if (total <= 0.0) {
      p[row * S] = total = 1.0;
    }
    double mass = 0.0;
    for (int n = 0; n + 1 < S; ++n) {
      p[row * S + n] /= total;
      mass += p[row * S + n];
    }
    // Put the rounding residue on the last entry so the row sums to 1 exactly.
    p[row * S + S - 1] = std::max(0.0, 1.0 - mass);
    r[row] = scale * uniform01(rng);
  }
  return MdpSpec(S, A, H, std::move(p), std::move(r), o.initial_states);
}

}  // namespace mqlucb
