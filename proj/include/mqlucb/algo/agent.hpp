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

#include <optional>
#include <string>

#include "mqlucb/algo/metrics.hpp"
#include "mqlucb/env/mdp.hpp"

namespace mqlucb {

/// Episodic learner driven by run_agent.
///
/// Per episode k the runner asks wants_switch(k), calls plan(k) if the
/// request is granted, rolls out policy() and hands the trajectory to
/// observe(). Between plans the policy must not change.
class Agent {
 public:
  virtual ~Agent() = default;

  virtual std::string name() const = 0;
  virtual bool wants_switch(int k) const = 0;
  virtual void plan(int k) = 0;
  virtual const Policy& policy() const = 0;
  virtual void observe(const Trajectory& trajectory) = 0;

  /// Exploration bonus the current policy attaches to (h, z); 0 if none.
  virtual double bonus(int /*h*/, int /*z*/) const { return 0.0; }
  /// Optimistic estimate V_{k,h}(s), when the agent maintains one.
  virtual std::optional<double> optimistic_value(int /*h*/, int /*s*/) const {
    return std::nullopt;
  }
  virtual InvariantCounters invariants() const { return {}; }
};

}  // namespace mqlucb
