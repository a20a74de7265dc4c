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

// Randomized and exhaustive property suites. Every suite is a pure function
// of its seed and trial count.

#ifndef WHSA_SUITES_H_
#define WHSA_SUITES_H_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "whsa/arrangement.h"
#include "whsa/json_io.h"

namespace whsa {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct SuiteResult {
  std::string name;
  std::uint64_t seed = 0;
  int trials = 0;
  int mismatches = 0;
  std::vector<Json> counterexamples;  // at most kMaxCounterexamples
  Json stats = Json::object();
  bool passed() const { return mismatches == 0; }
};

inline constexpr int kMaxCounterexamples = 20;

enum class ArrangementKind { kRandom, kDegenerate };

// Integer-entry r x n arrangement without zero columns and of full rank.
// kDegenerate replaces one or two columns by combinations of at most r-1
// others (parallel columns, concurrent triples, ...).
Arrangement random_arrangement(int r, int n, ArrangementKind kind, std::mt19937_64& rng);

enum class PointKind { kGeneric, kOnDivisor, kOnIntersection };

// A point of P^{r-1}: generic, on one random B_i, or on the intersection of
// between 2 and r-1 random divisors (falls back to a single divisor if r = 2).
QVector random_point(const Arrangement& arr, PointKind kind, std::mt19937_64& rng);

// Size pairs used by the suites.
std::vector<std::pair<int, int>> git_suite_sizes();      // (2,4) (2,5) (3,5) (3,6)
std::vector<std::pair<int, int>> chamber_suite_sizes();  // (2,4) (2,5) (3,5)

SuiteResult run_git_lc_equiv(std::uint64_t seed, int trials);
SuiteResult run_chamber_coincide(std::uint64_t seed, int trials,
                                 const std::vector<std::pair<int, int>>& sizes);
SuiteResult run_degree_gen(const std::vector<std::pair<int, int>>& sizes,
                           const std::vector<int>& degrees);
SuiteResult run_reconstruct_roundtrip(std::uint64_t seed, int trials);

Json to_json(const SuiteResult& s);

}  // namespace whsa

#endif  // WHSA_SUITES_H_
