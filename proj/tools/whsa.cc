// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// whsa: command-line front end. Reports go to stdout as JSON, errors to
// stderr. Exit codes: 0 verdict true, 1 verdict false, 2 input error,
// 3 cap exceeded.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "whsa/commands.h"
#include "whsa/fixtures.h"
#include "whsa/suites.h"

namespace {

using whsa::Json;

int exit_for(const whsa::Error& e) {
  return e.kind() == whsa::ErrorKind::kCap ? whsa::kExitCap : whsa::kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for weighted stable hyperplane arrangements"};
  app.require_subcommand(1);
  bool json_out = true;
  bool pretty = false;
  bool timing = false;
  app.add_flag("--json", json_out, "Emit compact JSON (default)");
  app.add_flag("--pretty", pretty, "Indent the JSON output");
  app.add_flag("--timing", timing, "Include wall-clock seconds in the report");

  std::string arr_file, weight_file, point_file, at_file;

  auto* lc = app.add_subcommand("lc", "lc and klt verdicts for (P^{r-1}, sum b_i B_i)");
  lc->add_option("arrangement", arr_file, "Arrangement JSON")->required();
  lc->add_option("weight", weight_file, "Weight JSON")->required();
  lc->add_option("--at", at_file, "Point JSON for the local variants");

  auto* git = app.add_subcommand("git", "Torus GIT stability of a point");
  git->add_option("arrangement", arr_file, "Arrangement JSON")->required();
  git->add_option("weight", weight_file, "Weight JSON")->required();
  git->add_option("point", point_file, "Point JSON")->required();

  std::vector<std::string> weight_files;
  bool crosscheck = false;
  auto* chamber = app.add_subcommand("chamber", "Chamber relations between weights");
  chamber->add_option("weights", weight_files, "Two or more weight JSON files")->required();
  chamber->add_flag("--matroid-crosscheck", crosscheck, "Compare against Z-chamber equivalence");

  std::string mode_name, tiling_file, example, tiling_weight;
  auto* tiling = app.add_subcommand("tiling", "Weighted matroid tiling diagnostics");
  tiling->add_option("mode", mode_name, "validate, strata, parents or reconstruct")
      ->required()
      ->check(CLI::IsMember({"validate", "strata", "parents", "reconstruct"}));
  tiling->add_option("file", tiling_file, "Tiling JSON");
  tiling->add_option("--example", example, "Bundled tiling name")
      ->check(CLI::IsMember(whsa::fixtures::tiling_names()));
  tiling->add_option("--weight", tiling_weight, "Weight JSON replacing the tiling's weight");

  std::string suite_name;
  std::uint64_t seed = whsa::kDefaultSeed;
  std::optional<int> trials;
  auto* suite = app.add_subcommand("suite", "Randomized and exhaustive property suites");
  suite->add_option("name", suite_name, "Suite name")
      ->required()
      ->check(CLI::IsMember(whsa::suite_names()));
  suite->add_option("--seed", seed, "64-bit seed");
  suite->add_option("--trials", trials, "Trial count");

  std::string fixture_name;
  auto* fixture = app.add_subcommand("fixture", "Print a bundled input as JSON");
  fixture->add_option("name", fixture_name, "Fixture name")
      ->required()
      ->check(CLI::IsMember(whsa::fixture_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return whsa::kExitInput;
  }
  const int indent = pretty ? 2 : -1;

  try {
    if (fixture->parsed()) {
      std::cout << whsa::fixture_json(fixture_name)->dump(indent) << "\n";
      return whsa::kExitTrue;
    }
    whsa::RunReport report;
    if (lc->parsed()) {
      std::optional<whsa::QVector> at;
      if (!at_file.empty()) at = whsa::point_from_json(whsa::read_json_file(at_file));
      report = whsa::cmd_lc(whsa::arrangement_from_json(whsa::read_json_file(arr_file)),
                            whsa::weight_from_json(whsa::read_json_file(weight_file)), at);
    } else if (git->parsed()) {
      report = whsa::cmd_git(whsa::arrangement_from_json(whsa::read_json_file(arr_file)),
                             whsa::weight_from_json(whsa::read_json_file(weight_file)),
                             whsa::point_from_json(whsa::read_json_file(point_file)));
    } else if (chamber->parsed()) {
      std::vector<whsa::Weight> weights;
      for (const auto& f : weight_files) weights.push_back(whsa::weight_from_json(whsa::read_json_file(f)));
      report = whsa::cmd_chamber(weights, crosscheck);
    } else if (tiling->parsed()) {
      if (example.empty() == tiling_file.empty()) {
        throw whsa::Error(whsa::ErrorKind::kInput, "give exactly one of a tiling file or --example");
      }
      whsa::WeightedTiling t = example.empty()
                                   ? whsa::tiling_from_json(whsa::read_json_file(tiling_file))
                                   : *whsa::fixtures::tiling(example);
      if (!tiling_weight.empty()) t.weight = whsa::weight_from_json(whsa::read_json_file(tiling_weight));
      static const std::map<std::string, whsa::TilingMode> modes = {
          {"validate", whsa::TilingMode::kValidate},
          {"strata", whsa::TilingMode::kStrata},
          {"parents", whsa::TilingMode::kParents},
          {"reconstruct", whsa::TilingMode::kReconstruct}};
      report = whsa::cmd_tiling(t, modes.at(mode_name));
    } else if (suite->parsed()) {
      report = whsa::cmd_suite(suite_name, seed, trials);
    }
    std::cout << whsa::to_json(report, timing).dump(indent) << "\n";
    return report.exit_code();
  } catch (const whsa::Error& e) {
    std::cerr << "whsa: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "whsa: " << e.what() << "\n";
    return whsa::kExitInput;
  }
}
