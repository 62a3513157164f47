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

#include "mqlucb/env/mdp_io.hpp"

#include <fstream>

namespace mqlucb {

using nlohmann::json;

namespace {

const json& field(const json& doc, const std::string& path, const char* key) {
  if (!doc.is_object()) throw MdpFormatError(path, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw MdpFormatError(path + "." + key, "missing field");
  return *it;
}

int positive_int(const json& doc, const std::string& path, const char* key) {
  const json& v = field(doc, path, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw MdpFormatError(path + "." + key, "expected a positive integer");
  }
  return v.get<int>();
}

void expect_array(const json& v, const std::string& path, std::size_t size) {
  if (!v.is_array() || v.size() != size) {
    throw MdpFormatError(path, "expected an array of length " + std::to_string(size));
  }
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) throw MdpFormatError(path, "expected a number");
  return v.get<double>();
}

std::string idx(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

}  // namespace

json initial_states_to_json(const InitialStateSchedule& schedule) {
  switch (schedule.mode()) {
    case InitialStateSchedule::Mode::kFixed:
      return {{"mode", "fixed"}, {"state", schedule.fixed_state()}};
    case InitialStateSchedule::Mode::kCategorical:
      return {{"mode", "categorical"}, {"probabilities", schedule.probabilities()}};
    case InitialStateSchedule::Mode::kList:
      return {{"mode", "list"}, {"states", schedule.states()}};
  }
  return {};
}

InitialStateSchedule initial_states_from_json(const json& doc, const std::string& path) {
  const json& mode = field(doc, path, "mode");
  if (!mode.is_string()) throw MdpFormatError(path + ".mode", "expected a string");
  const auto m = mode.get<std::string>();
  if (m == "fixed") {
    const json& s = field(doc, path, "state");
    if (!s.is_number_integer()) throw MdpFormatError(path + ".state", "expected an integer");
    return InitialStateSchedule::fixed(s.get<int>());
  }
  if (m == "categorical") {
    const json& p = field(doc, path, "probabilities");
    if (!p.is_array()) throw MdpFormatError(path + ".probabilities", "expected an array");
    std::vector<double> probs;
    for (std::size_t i = 0; i < p.size(); ++i) probs.push_back(number(p[i], idx(path + ".probabilities", i)));
    return InitialStateSchedule::categorical(std::move(probs));
  }
  if (m == "list") {
    const json& s = field(doc, path, "states");
    if (!s.is_array()) throw MdpFormatError(path + ".states", "expected an array");
    std::vector<int> states;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!s[i].is_number_integer()) throw MdpFormatError(idx(path + ".states", i), "expected an integer");
      states.push_back(s[i].get<int>());
    }
    return InitialStateSchedule::list(std::move(states));
  }
  throw MdpFormatError(path + ".mode", "unknown mode '" + m + "'");
}

json mdp_to_json(const MdpSpec& mdp) {
  const int S = mdp.num_states(), A = mdp.num_actions(), H = mdp.horizon();
  json transitions = json::array(), rewards = json::array();
  for (int h = 0; h < H; ++h) {
    json th = json::array(), rh = json::array();
    for (int s = 0; s < S; ++s) {
      json ts = json::array(), rs = json::array();
      for (int a = 0; a < A; ++a) {
        const auto row = mdp.transition_row(h, s, a);
        ts.push_back(std::vector<double>(row.begin(), row.end()));
        rs.push_back(mdp.reward(h, s, a));
      }
      th.push_back(std::move(ts));
      rh.push_back(std::move(rs));
    }
    transitions.push_back(std::move(th));
    rewards.push_back(std::move(rh));
  }
  return {{"schema", kMdpSchema},
          {"num_states", S},
          {"num_actions", A},
          {"horizon", H},
          {"transitions", std::move(transitions)},
          {"rewards", std::move(rewards)},
          {"initial_states", initial_states_to_json(mdp.initial_states())}};
}

MdpSpec mdp_from_json(const json& doc, const std::string& root) {
  const json& schema = field(doc, root, "schema");
  if (schema != kMdpSchema) {
    throw MdpFormatError(root + ".schema", std::string("expected \"") + kMdpSchema + "\"");
  }
  const int S = positive_int(doc, root, "num_states");
  const int A = positive_int(doc, root, "num_actions");
  const int H = positive_int(doc, root, "horizon");

  const json& t = field(doc, root, "transitions");
  const json& r = field(doc, root, "rewards");
  const std::string tp = root + ".transitions", rp = root + ".rewards";
  expect_array(t, tp, static_cast<std::size_t>(H));
  expect_array(r, rp, static_cast<std::size_t>(H));
  std::vector<double> p, rewards;
  p.reserve(static_cast<std::size_t>(H * S * A * S));
  for (std::size_t h = 0; h < static_cast<std::size_t>(H); ++h) {
    expect_array(t[h], idx(tp, h), static_cast<std::size_t>(S));
    expect_array(r[h], idx(rp, h), static_cast<std::size_t>(S));
    for (std::size_t s = 0; s < static_cast<std::size_t>(S); ++s) {
      expect_array(t[h][s], idx(idx(tp, h), s), static_cast<std::size_t>(A));
      expect_array(r[h][s], idx(idx(rp, h), s), static_cast<std::size_t>(A));
      for (std::size_t a = 0; a < static_cast<std::size_t>(A); ++a) {
        const std::string rowp = idx(idx(idx(tp, h), s), a);
        expect_array(t[h][s][a], rowp, static_cast<std::size_t>(S));
        for (std::size_t n = 0; n < static_cast<std::size_t>(S); ++n) p.push_back(number(t[h][s][a][n], idx(rowp, n)));
        rewards.push_back(number(r[h][s][a], idx(idx(idx(rp, h), s), a)));
      }
    }
  }
  auto schedule = initial_states_from_json(field(doc, root, "initial_states"), root + ".initial_states");
  try {
    return MdpSpec(S, A, H, std::move(p), std::move(rewards), std::move(schedule));
  } catch (const std::invalid_argument& e) {
    throw MdpFormatError(root, e.what());
  }
}

MdpSpec load_mdp(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw MdpFormatError("$", "cannot open " + file.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw MdpFormatError("$", std::string("parse error: ") + e.what());
  }
  return mdp_from_json(doc);
}

void save_mdp(const MdpSpec& mdp, const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << mdp_to_json(mdp).dump(2) << '\n';
}

}  // namespace mqlucb
