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

#include "whsa/fixtures.h"

namespace whsa::fixtures {
namespace {

// r-subsets of [n] whose intersection with `block` has at most `cap`
// elements.
Matroid capped(int r, int n, Subset block, int cap) {
  std::vector<Subset> bases;
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    if (subset_size(s) == r && subset_size(s & block) <= cap) bases.push_back(s);
  }
  return Matroid(n, r, std::move(bases));
}

Subset one_based(std::initializer_list<int> xs) {
  Subset s = 0;
  for (int x : xs) s |= Subset{1} << (x - 1);
  return s;
}

}  // namespace

QMatrix three_degs_matrix() {
  return QMatrix({{0, 1, 0, 1, 1}, {1, 1, 0, 0, 0}, {0, 0, 1, 1, 0}});
}

Arrangement three_degs() { return Arrangement(three_degs_matrix()); }
QVector three_degs_q1() { return {0, 0, 1}; }
QVector three_degs_q2() { return {0, 1, 0}; }

Arrangement triple_point() {
  return Arrangement(QMatrix({{1, 0, 0, 1, 1}, {0, 1, 0, 2, 1}, {0, 0, 1, 3, 0}}));
}

Arrangement doubled_point() { return Arrangement(QMatrix({{1, 0, 1, 1}, {0, 1, 1, 1}})); }

Weight example_w() { return Weight(3, {1, 1, 1, 1, Rational(9, 10)}); }
Weight example_w_prime() { return unit_weight(3, 5); }
Weight example_w_double_prime() {
  return Weight(3, {Rational(11, 20), Rational(11, 20), 1, 1, Rational(9, 10)});
}

std::vector<std::string> tiling_names() {
  return {"octahedron", "w-2-4", "p3n5", "two-block", "trivial-2-4"};
}

std::optional<WeightedTiling> tiling(std::string_view name) {
  if (name == "octahedron") {
    return WeightedTiling{unit_weight(2, 4),
                          {capped(2, 4, one_based({3, 4}), 1), capped(2, 4, one_based({1, 2}), 1)}};
  }
  if (name == "w-2-4") {
    return WeightedTiling{Weight(2, {Rational(1, 2), Rational(1, 2), 1, 1}),
                          {capped(2, 4, one_based({1, 2}), 1)}};
  }
  if (name == "p3n5") {
    return WeightedTiling{unit_weight(3, 5),
                          {three_degs().matroid(), capped(3, 5, one_based({1, 2}), 1),
                           capped(3, 5, one_based({3, 4}), 1)}};
  }
  if (name == "two-block") {
    return WeightedTiling{unit_weight(2, 5),
                          {capped(2, 5, one_based({1, 2}), 1), capped(2, 5, one_based({3, 4, 5}), 1)}};
  }
  if (name == "trivial-2-4") {
    return WeightedTiling{unit_weight(2, 4), {capped(2, 4, 0, 0)}};
  }
  return std::nullopt;
}

}  // namespace whsa::fixtures
