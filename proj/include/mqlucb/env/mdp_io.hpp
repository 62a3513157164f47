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

#include <filesystem>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "mqlucb/env/mdp.hpp"

namespace mqlucb {

inline constexpr const char* kMdpSchema = "mdp/v1";

/// Malformed or invalid MDP document. path() points at the offending field
/// in JSON-pointer-like notation, e.g. "$.transitions[0][1]".
class MdpFormatError : public std::runtime_error {
 public:
  MdpFormatError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Layout:
///   {"schema": "mdp/v1", "num_states": S, "num_actions": A, "horizon": H,
///    "transitions": [h][s][a][s'], "rewards": [h][s][a],
///    "initial_states": {"mode": "fixed", "state": 0}
///                    | {"mode": "categorical", "probabilities": [...]}
///                    | {"mode": "list", "states": [...]}}
nlohmann::json mdp_to_json(const MdpSpec& mdp);
MdpSpec mdp_from_json(const nlohmann::json& doc, const std::string& root = "$");

nlohmann::json initial_states_to_json(const InitialStateSchedule& schedule);
InitialStateSchedule initial_states_from_json(const nlohmann::json& doc, const std::string& path);

MdpSpec load_mdp(const std::filesystem::path& file);
void save_mdp(const MdpSpec& mdp, const std::filesystem::path& file);

}  // namespace mqlucb
