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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mqlucb/bench/class_spec.hpp"
#include "mqlucb/bench/compare.hpp"
#include "mqlucb/bench/experiment.hpp"
#include "mqlucb/bench/experiment_spec.hpp"
#include "mqlucb/eluder/dim_report_io.hpp"
#include "mqlucb/env/dp.hpp"
#include "mqlucb/env/mdp_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitRunFailure = 3;

constexpr const char* kOutDirEnv = "MQLUCB_OUT_DIR";

std::filesystem::path env_out_dir() {
  const char* v = std::getenv(kOutDirEnv);
  return v ? std::filesystem::path(v) : std::filesystem::path();
}

int cmd_run(const std::string& spec_file, unsigned long long seed_offset, int workers,
            const std::string& out) {
  mqlucb::ExperimentSpec spec;
  try {
    spec = mqlucb::load_experiment_spec(spec_file);
  } catch (const mqlucb::SpecError& e) {
    std::cerr << "invalid spec: " << e.what() << '\n';
    return kExitInvalid;
  }
  mqlucb::RunOptions opt;
  opt.seed_offset = seed_offset;
  opt.workers = workers;
  if (!out.empty()) {
    opt.output_dir = out;
  } else if (spec.output_dir.empty()) {
    opt.output_dir = env_out_dir();
  }

  mqlucb::ExperimentResult result;
  try {
    result = mqlucb::run_experiment(spec, opt);
  } catch (const mqlucb::SpecError& e) {
    std::cerr << "invalid spec: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "run failed: " << e.what() << '\n';
    return kExitRunFailure;
  }

  for (const auto& [label, agg] : result.summary.at("aggregates").items()) {
    std::cout << label
              << "  regret(K) " << agg.at("mean_final_regret").get<double>()
              << " +- " << agg.at("stderr_final_regret").get<double>()
              << "  switches " << agg.at("mean_switches").get<double>() << '\n';
  }
  std::cout << "wrote " << result.output_dir.string() << '\n';
  for (const auto& f : result.failures) {
    std::cerr << "failed: " << f.label << " seed " << f.seed << ": " << f.error << '\n';
  }
  return result.failures.empty() ? kExitOk : kExitRunFailure;
}

int cmd_compare(const std::vector<std::string>& dirs, bool as_json) {
  std::vector<std::filesystem::path> paths(dirs.begin(), dirs.end());
  try {
    const auto sets = mqlucb::load_trace_dirs(paths);
    const auto cmp = mqlucb::compare_regret(sets);
    if (as_json) {
      std::cout << mqlucb::comparison_to_json(cmp).dump(2) << '\n';
    } else {
      std::cout << mqlucb::format_comparison(cmp);
    }
  } catch (const std::exception& e) {
    std::cerr << "compare: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}

int cmd_dims(const std::string& class_file, const std::string& out) {
  mqlucb::DimReport report;
  try {
    report = mqlucb::evaluate_class_spec_file(class_file);
  } catch (const mqlucb::SpecError& e) {
    std::cerr << "invalid class spec: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "dims failed: " << e.what() << '\n';
    return kExitRunFailure;
  }
  const std::string text = mqlucb::dim_report_to_json(report).dump(2);
  std::cout << text << '\n';
  std::filesystem::path dir = out.empty() ? env_out_dir() : std::filesystem::path(out);
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "dimreport.json") << text << '\n';
  }
  return report.violation ? kExitRunFailure : kExitOk;
}

int cmd_validate(const std::string& mdp_file) {
  try {
    const mqlucb::MdpSpec mdp = mqlucb::load_mdp(mdp_file);
    const auto tables = mqlucb::optimal_values(mdp);
    std::cout << "ok: S=" << mdp.num_states() << " A=" << mdp.num_actions()
              << " H=" << mdp.horizon() << " max_total_reward=" << mdp.max_total_reward();
    const auto support = mdp.initial_states().support(mdp.num_states());
    double best = 0.0;
    for (int s : support) best = std::max(best, tables.value(0, s));
    std::cout << " max_initial_V*=" << best << '\n';
  } catch (const std::exception& e) {
    std::cerr << "invalid mdp: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MQL-UCB regret laboratory"};
  app.require_subcommand(1);

  unsigned long long seed_offset = 0;
  int workers = 0;
  std::string out;

  std::string spec_file;
  auto* run = app.add_subcommand("run", "run an experiment spec (expspec/v1)");
  run->add_option("spec", spec_file, "experiment spec file")->required();
  run->add_option("--seed-offset", seed_offset, "added to every seed");
  run->add_option("--workers", workers, "concurrent runs (0 = hardware threads)")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--out", out, "output directory (default: spec, then $" + std::string(kOutDirEnv) + ", then ./out)");

  std::vector<std::string> dirs;
  bool as_json = false;
  auto* compare = app.add_subcommand("compare", "compare regret across trace directories");
  compare->add_option("dirs", dirs, "trace directories")->required()->expected(1, -1);
  compare->add_flag("--json", as_json, "emit JSON instead of a table");

  std::string class_file;
  auto* dims = app.add_subcommand("dims", "dimension report for a class spec (classspec/v1)");
  dims->add_option("class-spec", class_file, "class spec file")->required();
  dims->add_option("--out", out, "also write dimreport.json here");

  std::string mdp_file;
  auto* validate = app.add_subcommand("validate", "check an MDP file (mdp/v1)");
  validate->add_option("mdp", mdp_file, "MDP file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  if (*run) return cmd_run(spec_file, seed_offset, workers, out);
  if (*compare) return cmd_compare(dirs, as_json);
  if (*dims) return cmd_dims(class_file, out);
  if (*validate) return cmd_validate(mdp_file);
  return kExitInvalid;
}
