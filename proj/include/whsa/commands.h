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

// Command implementations behind the whsa binary. Each returns a report
// whose JSON form is a deterministic function of the inputs and seed.

#ifndef WHSA_COMMANDS_H_
#define WHSA_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "whsa/arrangement.h"
#include "whsa/json_io.h"
#include "whsa/tiling.h"
#include "whsa/weights.h"

namespace whsa {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCap = 3;

struct RunReport {
  std::string command;
  std::string inputs_digest;  // FNV-1a 64 of the canonical input JSON
  std::optional<std::uint64_t> seed;
  Json verdicts = Json::object();
  Json counterexamples = Json::array();
  bool verdict = true;  // drives the exit code
  double seconds = 0;
  int exit_code() const { return verdict ? kExitTrue : kExitFalse; }
};

Json to_json(const RunReport& r, bool with_timing);

// Hex FNV-1a 64 digest of the concatenated compact dumps.
std::string digest(const std::vector<Json>& inputs);

RunReport cmd_lc(const Arrangement& arr, const Weight& w, const std::optional<QVector>& at);
RunReport cmd_git(const Arrangement& arr, const Weight& w, const QVector& p);
// Needs at least two weights; the verdict is same_chamber of the first two.
RunReport cmd_chamber(const std::vector<Weight>& weights, bool matroid_crosscheck);

enum class TilingMode { kValidate, kStrata, kParents, kReconstruct };
RunReport cmd_tiling(const WeightedTiling& t, TilingMode mode);

// Error(kInput) for an unknown suite name.
RunReport cmd_suite(const std::string& name, std::uint64_t seed, std::optional<int> trials);

std::vector<std::string> suite_names();
int default_trials(const std::string& suite);

// Bundled inputs by name (tilings, arrangements, points and weights).
std::vector<std::string> fixture_names();
std::optional<Json> fixture_json(const std::string& name);

}  // namespace whsa

#endif  // WHSA_COMMANDS_H_
