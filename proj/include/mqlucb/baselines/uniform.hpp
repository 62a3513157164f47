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

#include "mqlucb/algo/agent.hpp"

namespace mqlucb {

/// Plays the uniform-random policy and never replans.
class UniformAgent final : public Agent {
 public:
  explicit UniformAgent(const MdpSpec& mdp);

  std::string name() const override { return "uniform"; }
  bool wants_switch(int) const override { return false; }
  void plan(int) override {}
  const Policy& policy() const override { return policy_; }
  void observe(const Trajectory&) override {}

 private:
  Policy policy_;
};

}  // namespace mqlucb
