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

// Bundled example configurations.

#ifndef WHSA_FIXTURES_H_
#define WHSA_FIXTURES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "whsa/arrangement.h"
#include "whsa/tiling.h"

namespace whsa::fixtures {

// Five lines in P^2 with B1, B2, B5 through q1 = (0:0:1) and B3, B4, B5
// through q2 = (0:1:0).
QMatrix three_degs_matrix();
Arrangement three_degs();
QVector three_degs_q1();
QVector three_degs_q2();

// Five lines in P^2 where only B1, B2, B5 are concurrent.
Arrangement triple_point();

// Two lines on P^1 with B3 = B4.
Arrangement doubled_point();

// Example weights w = (1,1,1,1,9/10), w' = (1,...,1),
// w'' = (11/20,11/20,1,1,9/10).
Weight example_w();
Weight example_w_prime();
Weight example_w_double_prime();

// Tilings: "octahedron", "w-2-4", "p3n5", "two-block", "trivial-2-4".
std::vector<std::string> tiling_names();
std::optional<WeightedTiling> tiling(std::string_view name);

}  // namespace whsa::fixtures

#endif  // WHSA_FIXTURES_H_
