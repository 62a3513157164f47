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

#include "mqlucb/env/hard_instance.hpp"

#include <stdexcept>
#include <string>

namespace mqlucb {

HardInstance make_hard_instance(int d, int horizon, int num_episodes, Rng& rng) {
  if (d < 4 || d % 4 != 0) {
    throw std::invalid_argument("hard instance dimension must be a positive multiple of 4, got " +
                                std::to_string(d));
  }
  if (horizon < 1) throw std::invalid_argument("hard instance horizon must be >= 1");
  const int subs = d / 4;
  if (num_episodes < subs || num_episodes % subs != 0) {
    throw std::invalid_argument("episode count must be a positive multiple of d/4");
  }

  const int S = 2 * subs, A = 2, H = horizon;
  std::vector<std::vector<int>> special(static_cast<std::size_t>(subs),
                                        std::vector<int>(static_cast<std::size_t>(H)));
  for (auto& seq : special) {
    for (auto& a : seq) a = static_cast<int>(rng() >> 63);
  }

  std::vector<double> p(static_cast<std::size_t>(H * S * A * S), 0.0);
  std::vector<double> r(static_cast<std::size_t>(H * S * A), 0.0);
  auto at = [&](int h, int s, int a) { return static_cast<std::size_t>((h * S + s) * A + a); };
  for (int i = 0; i < subs; ++i) {
    const int start = HardInstance::start_state(i);
    const int sink = HardInstance::absorbing_state(i);
    for (int h = 0; h < H; ++h) {
      const int good = special[static_cast<std::size_t>(i)][static_cast<std::size_t>(h)];
      for (int a = 0; a < A; ++a) {
        p[at(h, start, a) * S + (a == good ? start : sink)] = 1.0;
        p[at(h, sink, a) * S + sink] = 1.0;
      }
      if (h == H - 1) r[at(h, start, good)] = 1.0;
    }
  }

  const int epoch_len = num_episodes / subs;
  std::vector<std::pair<int, int>> epochs;
  std::vector<int> schedule(static_cast<std::size_t>(num_episodes));
  for (int i = 0; i < subs; ++i) {
    epochs.emplace_back(i * epoch_len + 1, (i + 1) * epoch_len);
    for (int k = i * epoch_len; k < (i + 1) * epoch_len; ++k) {
      schedule[static_cast<std::size_t>(k)] = HardInstance::start_state(i);
    }
  }

  return HardInstance{subs, std::move(special), std::move(epochs),
                      MdpSpec(S, A, H, std::move(p), std::move(r),
                              InitialStateSchedule::list(std::move(schedule)))};
}

}  // namespace mqlucb
