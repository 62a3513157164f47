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

#include "mqlucb/bench/experiment_spec.hpp"

#include <fstream>
#include <set>

namespace mqlucb {

namespace {

using nlohmann::json;

std::string field(const std::string& path, const std::string& key) { return path + "." + key; }

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw SpecError(path, "expected an object");
}

void reject_unknown(const json& j, const std::string& path, const std::set<std::string>& known) {
  for (const auto& [key, _] : j.items()) {
    if (!known.contains(key)) throw SpecError(field(path, key), "unknown field");
  }
}

double get_number(const json& j, const std::string& key, const std::string& path, double fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number()) throw SpecError(field(path, key), "expected a number");
  return v.get<double>();
}

long long get_integer(const json& j, const std::string& key, const std::string& path,
                      long long fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw SpecError(field(path, key), "expected an integer");
  return v.get<long long>();
}

std::string get_string(const json& j, const std::string& key, const std::string& path,
                       const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_string()) throw SpecError(field(path, key), "expected a string");
  return v.get<std::string>();
}

InstanceSpec parse_instance(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path,
                 {"generator", "p", "num_states", "num_actions", "horizon", "concentration",
                  "reward_scale", "d", "path", "seed"});
  InstanceSpec inst;
  inst.raw = j;
  inst.generator = get_string(j, "generator", path, "");
  if (inst.generator.empty()) throw SpecError(field(path, "generator"), "missing");
  if (inst.generator == "chain2") {
  } else if (inst.generator == "two_outcome") {
    inst.p = get_number(j, "p", path, 0.5);
    if (!(inst.p >= 0.0 && inst.p <= 1.0)) throw SpecError(field(path, "p"), "must lie in [0, 1]");
  } else if (inst.generator == "random") {
    inst.num_states = static_cast<int>(get_integer(j, "num_states", path, 4));
    inst.num_actions = static_cast<int>(get_integer(j, "num_actions", path, 3));
    inst.horizon = static_cast<int>(get_integer(j, "horizon", path, 3));
    inst.concentration = get_number(j, "concentration", path, 1.0);
    inst.reward_scale = get_number(j, "reward_scale", path, 0.0);
    if (inst.num_states < 1) throw SpecError(field(path, "num_states"), "must be >= 1");
    if (inst.num_actions < 1) throw SpecError(field(path, "num_actions"), "must be >= 1");
    if (inst.horizon < 1) throw SpecError(field(path, "horizon"), "must be >= 1");
    if (!(inst.concentration > 0.0)) throw SpecError(field(path, "concentration"), "must be positive");
    if (inst.reward_scale * inst.horizon > 1.0) {
      throw SpecError(field(path, "reward_scale"), "reward_scale * horizon must be <= 1");
    }
  } else if (inst.generator == "hard") {
    inst.d = static_cast<int>(get_integer(j, "d", path, 8));
    inst.horizon = static_cast<int>(get_integer(j, "horizon", path, 6));
    if (inst.d < 4 || inst.d % 4 != 0) throw SpecError(field(path, "d"), "must be a positive multiple of 4");
    if (inst.horizon < 1) throw SpecError(field(path, "horizon"), "must be >= 1");
  } else if (inst.generator == "file") {
    inst.file = get_string(j, "path", path, "");
    if (inst.file.empty()) throw SpecError(field(path, "path"), "missing");
  } else {
    throw SpecError(field(path, "generator"), "unknown generator '" + inst.generator + "'");
  }
  if (j.contains("seed")) {
    const long long s = get_integer(j, "seed", path, 0);
    if (s < 0) throw SpecError(field(path, "seed"), "must be nonnegative");
    inst.seed = static_cast<unsigned long long>(s);
  }
  return inst;
}

AgentKind parse_kind(const std::string& s, const std::string& path) {
  if (s == "mql-ucb") return AgentKind::kMqlUcb;
  if (s == "lsvi-ucb") return AgentKind::kLsviUcb;
  if (s == "lsvi-ucb-det") return AgentKind::kLsviUcbDet;
  if (s == "uniform") return AgentKind::kUniform;
  throw SpecError(path, "unknown agent kind '" + s + "'");
}

BaselineConfig baseline_from_json(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"lambda", "c_bonus", "refresh_period"});
  BaselineConfig b;
  b.lambda = get_number(j, "lambda", path, b.lambda);
  b.c_bonus = get_number(j, "c_bonus", path, b.c_bonus);
  b.refresh_period = static_cast<int>(get_integer(j, "refresh_period", path, b.refresh_period));
  if (!(b.lambda > 0.0)) throw SpecError(field(path, "lambda"), "must be positive");
  if (b.c_bonus < 0.0) throw SpecError(field(path, "c_bonus"), "must be nonnegative");
  if (b.refresh_period < 1) throw SpecError(field(path, "refresh_period"), "must be >= 1");
  return b;
}

AgentSpec parse_agent(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"label", "kind", "config", "budget"});
  AgentSpec a;
  a.kind = parse_kind(get_string(j, "kind", path, "mql-ucb"), field(path, "kind"));
  a.label = get_string(j, "label", path, to_string(a.kind));
  if (a.label.empty() || a.label.find("__") != std::string::npos ||
      a.label.find('/') != std::string::npos) {
    throw SpecError(field(path, "label"), "labels must be nonempty without '/' or '__'");
  }
  const json config = j.value("config", json::object());
  const std::string cpath = field(path, "config");
  if (a.kind == AgentKind::kMqlUcb) {
    a.algo = algo_config_from_json(config, cpath);
  } else if (a.kind == AgentKind::kLsviUcb || a.kind == AgentKind::kLsviUcbDet) {
    a.baseline = baseline_from_json(config, cpath);
    a.baseline.rule =
        a.kind == AgentKind::kLsviUcb ? SwitchRule::kEveryEpisode : SwitchRule::kDetDoubling;
  } else if (!config.empty()) {
    throw SpecError(cpath, "the uniform agent takes no configuration");
  }
  if (j.contains("budget")) {
    const auto& b = j.at("budget");
    if (b.is_string() && b.get<std::string>() == "lower_bound") {
      a.budget_lower_bound = true;
    } else if (b.is_number_integer() && b.get<long long>() >= 0) {
      a.budget = static_cast<int>(b.get<long long>());
    } else if (!b.is_null()) {
      throw SpecError(field(path, "budget"), "expected a nonnegative integer or \"lower_bound\"");
    }
  }
  return a;
}

}  // namespace

std::string to_string(AgentKind kind) {
  switch (kind) {
    case AgentKind::kMqlUcb: return "mql-ucb";
    case AgentKind::kLsviUcb: return "lsvi-ucb";
    case AgentKind::kLsviUcbDet: return "lsvi-ucb-det";
    case AgentKind::kUniform: return "uniform";
  }
  return "unknown";
}

AlgoConfig algo_config_from_json(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path,
                 {"lambda", "alpha", "gamma", "chi", "range_bound", "mode", "c_bonus",
                  "c_hoeffding", "c_second", "variance_log_factor", "log_cover_f",
                  "log_cover_bonus", "cover_eps", "delta", "bonus_ratio", "refresh_period",
                  "stability_probes", "probe_seed", "preset"});
  const std::string preset = get_string(j, "preset", path, "default");
  AlgoConfig c;
  if (preset == "calibrated") {
    c = calibrated_practical_config();
  } else if (preset != "default") {
    throw SpecError(field(path, "preset"), "expected \"default\" or \"calibrated\"");
  }
  c.lambda = get_number(j, "lambda", path, c.lambda);
  c.alpha = get_number(j, "alpha", path, c.alpha);
  c.gamma = get_number(j, "gamma", path, c.gamma);
  c.chi = get_number(j, "chi", path, c.chi);
  c.range_bound = get_number(j, "range_bound", path, c.range_bound);
  const std::string mode = get_string(j, "mode", path, "practical");
  if (mode == "practical") {
    c.mode = BetaMode::kPractical;
  } else if (mode == "theory") {
    c.mode = BetaMode::kTheory;
  } else {
    throw SpecError(field(path, "mode"), "expected \"practical\" or \"theory\"");
  }
  c.c_bonus = get_number(j, "c_bonus", path, c.c_bonus);
  c.c_hoeffding = get_number(j, "c_hoeffding", path, c.c_hoeffding);
  c.c_second = get_number(j, "c_second", path, c.c_second);
  c.variance_log_factor = get_number(j, "variance_log_factor", path, c.variance_log_factor);
  c.log_cover_f = get_number(j, "log_cover_f", path, c.log_cover_f);
  c.log_cover_bonus = get_number(j, "log_cover_bonus", path, c.log_cover_bonus);
  c.cover_eps = get_number(j, "cover_eps", path, c.cover_eps);
  c.delta = get_number(j, "delta", path, c.delta);
  c.bonus_ratio = get_number(j, "bonus_ratio", path, c.bonus_ratio);
  c.refresh_period = static_cast<int>(get_integer(j, "refresh_period", path, c.refresh_period));
  c.stability_probes =
      static_cast<int>(get_integer(j, "stability_probes", path, c.stability_probes));
  const long long seed = get_integer(j, "probe_seed", path, static_cast<long long>(c.probe_seed));
  if (seed < 0) throw SpecError(field(path, "probe_seed"), "must be nonnegative");
  c.probe_seed = static_cast<unsigned long long>(seed);
  try {
    validate(c);
  } catch (const std::invalid_argument& e) {
    throw SpecError(path, e.what());
  }
  return c;
}

json algo_config_to_json(const AlgoConfig& c) {
  return {{"lambda", c.lambda},
          {"alpha", c.alpha},
          {"gamma", c.gamma},
          {"chi", c.chi},
          {"range_bound", c.range_bound},
          {"mode", c.mode == BetaMode::kTheory ? "theory" : "practical"},
          {"c_bonus", c.c_bonus},
          {"c_hoeffding", c.c_hoeffding},
          {"c_second", c.c_second},
          {"variance_log_factor", c.variance_log_factor},
          {"log_cover_f", c.log_cover_f},
          {"log_cover_bonus", c.log_cover_bonus},
          {"cover_eps", c.cover_eps},
          {"delta", c.delta},
          {"bonus_ratio", c.bonus_ratio},
          {"refresh_period", c.refresh_period},
          {"stability_probes", c.stability_probes},
          {"probe_seed", c.probe_seed}};
}

ExperimentSpec experiment_spec_from_json(const json& j) {
  const std::string root = "$";
  require_object(j, root);
  reject_unknown(j, root, {"schema", "instance", "agents", "K", "seeds", "output_dir", "emit"});
  if (get_string(j, "schema", root, "") != kExperimentSchema) {
    throw SpecError(field(root, "schema"), "expected \"expspec/v1\"");
  }
  ExperimentSpec spec;
  if (!j.contains("instance")) throw SpecError(field(root, "instance"), "missing");
  spec.instance = parse_instance(j.at("instance"), field(root, "instance"));

  if (!j.contains("agents") || !j.at("agents").is_array() || j.at("agents").empty()) {
    throw SpecError(field(root, "agents"), "expected a nonempty array");
  }
  std::set<std::string> labels;
  for (std::size_t i = 0; i < j.at("agents").size(); ++i) {
    const std::string path = root + ".agents[" + std::to_string(i) + "]";
    AgentSpec a = parse_agent(j.at("agents")[i], path);
    if (!labels.insert(a.label).second) throw SpecError(path + ".label", "duplicate label");
    spec.agents.push_back(std::move(a));
  }

  const long long K = get_integer(j, "K", root, 0);
  if (K < 1) throw SpecError(field(root, "K"), "must be >= 1");
  spec.num_episodes = static_cast<int>(K);

  if (!j.contains("seeds") || !j.at("seeds").is_array() || j.at("seeds").empty()) {
    throw SpecError(field(root, "seeds"), "expected a nonempty array");
  }
  std::set<unsigned long long> seen;
  for (std::size_t i = 0; i < j.at("seeds").size(); ++i) {
    const auto& s = j.at("seeds")[i];
    const std::string path = root + ".seeds[" + std::to_string(i) + "]";
    if (!s.is_number_integer() || s.get<long long>() < 0) {
      throw SpecError(path, "expected a nonnegative integer");
    }
    const auto v = s.get<unsigned long long>();
    if (!seen.insert(v).second) throw SpecError(path, "duplicate seed");
    spec.seeds.push_back(v);
  }

  spec.output_dir = get_string(j, "output_dir", root, "");
  if (j.contains("emit")) {
    const auto& e = j.at("emit");
    const std::string path = field(root, "emit");
    require_object(e, path);
    reject_unknown(e, path, {"traces"});
    if (e.contains("traces")) {
      if (!e.at("traces").is_boolean()) throw SpecError(field(path, "traces"), "expected a boolean");
      spec.emit_traces = e.at("traces").get<bool>();
    }
  }
  return spec;
}

ExperimentSpec load_experiment_spec(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw SpecError("$", "cannot open " + file.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError("$", std::string("not valid JSON: ") + e.what());
  }
  ExperimentSpec spec = experiment_spec_from_json(doc);
  if (spec.instance.generator == "file" && spec.instance.file.is_relative()) {
    spec.instance.file = file.parent_path() / spec.instance.file;
  }
  return spec;
}

}  // namespace mqlucb
