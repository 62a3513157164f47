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

#include "mqlucb/baselines/uniform.hpp"

namespace mqlucb {

UniformAgent::UniformAgent(const MdpSpec& mdp)
    : policy_(Policy::uniform(mdp.horizon(), mdp.num_states(), mdp.num_actions())) {}

}  // namespace mqlucb
