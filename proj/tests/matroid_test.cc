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

#include "whsa/matroid.h"

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

namespace whsa {
namespace {

Subset S(std::initializer_list<int> one_based) {
  Subset s = 0;
  for (int i : one_based) s |= Subset{1} << (i - 1);
  return s;
}

QMatrix ThreeDegs() {
  return QMatrix({{0, 1, 0, 1, 1}, {1, 1, 0, 0, 0}, {0, 0, 1, 1, 0}});
}

std::vector<Subset> AllOfSize(int n, int r) {
  std::vector<Subset> out;
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    if (subset_size(s) == r) out.push_back(s);
  }
  return out;
}

// Independent rank oracle: the largest intersection with a basis.
int RankOracle(const std::vector<Subset>& bases, Subset s) {
  int best = 0;
  for (Subset b : bases) best = std::max(best, subset_size(b & s));
  return best;
}

TEST(Matroid, UniformRanks) {
  Matroid u(5, 3, AllOfSize(5, 3));
  for (Subset s = 0; s < 32; ++s) EXPECT_EQ(u.rank(s), std::min(3, subset_size(s)));
  EXPECT_EQ(u.loops(), 0u);
}

TEST(Matroid, RejectsBadFamilies) {
  EXPECT_THROW(Matroid(4, 2, {S({1, 2}), S({3, 4})}), Error);
  EXPECT_THROW(Matroid(4, 2, {S({1, 2, 3})}), Error);
  EXPECT_THROW(Matroid(4, 2, {}), Error);
  EXPECT_THROW(Matroid(17, 2, {S({1, 2})}), Error);
}

TEST(Matroid, ThreeDegsFromMatrix) {
  Matroid m = matroid_from_matrix(ThreeDegs());
  EXPECT_EQ(m.n(), 5);
  EXPECT_EQ(m.r(), 3);
  std::vector<Subset> expect;
  for (Subset s : AllOfSize(5, 3)) {
    if (s != S({1, 2, 5}) && s != S({3, 4, 5})) expect.push_back(s);
  }
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(m.bases(), expect);
  EXPECT_EQ(m.rank(S({1, 2, 5})), 2);
  EXPECT_EQ(m.closure(S({1, 2})), S({1, 2, 5}));
  EXPECT_TRUE(m.is_flat(S({3, 4, 5})));
}

TEST(Matroid, RankMatchesOracle) {
  Matroid m = matroid_from_matrix(ThreeDegs());
  for (Subset s = 0; s < 32; ++s) EXPECT_EQ(m.rank(s), RankOracle(m.bases(), s));
  EXPECT_THROW(rank(m, S({6})), Error);
}

TEST(Matroid, RankDeficientMatrixRejected) {
  EXPECT_THROW(matroid_from_matrix(QMatrix({{1, 2}, {2, 4}})), Error);
}

TEST(MatroidPolytope, HrepMatchesBasisIndicators) {
  Matroid m = matroid_from_matrix(ThreeDegs());
  MatroidPolytope mp = matroid_polytope(m);
  EXPECT_EQ(vertices(mp.hrep).vertices, mp.vrep.vertices);
  EXPECT_EQ(mp.vrep.vertices.size(), 8u);
}

TEST(MatroidPolytope, HrepMatchesForAllSmallMatroids) {
  for (auto [r, n] : {std::pair{2, 4}, std::pair{2, 5}}) {
    for (const Matroid& m : enumerate_matroids(r, n, false)) {
      MatroidPolytope mp = matroid_polytope(m);
      ASSERT_EQ(vertices(mp.hrep).vertices, mp.vrep.vertices);
    }
  }
}

// Frozen from an independent brute-force count of exchange-closed families.
TEST(Enumerate, Counts) {
  auto count = [](int r, int n, bool loopless) {
    return enumerate_matroids(r, n, loopless).size();
  };
  EXPECT_EQ(count(1, 2, false), 3u);
  EXPECT_EQ(count(1, 2, true), 1u);
  EXPECT_EQ(count(2, 3, false), 7u);
  EXPECT_EQ(count(2, 3, true), 4u);
  EXPECT_EQ(count(2, 4, false), 36u);
  EXPECT_EQ(count(2, 4, true), 14u);
  EXPECT_EQ(count(2, 5, false), 171u);
  EXPECT_EQ(count(2, 5, true), 51u);
  EXPECT_EQ(count(3, 5, false), 171u);
  EXPECT_EQ(count(3, 5, true), 106u);
  EXPECT_THROW(enumerate_matroids(3, 7, false), Error);
}

TEST(Enumerate, DistinctAndSorted) {
  auto ms = enumerate_matroids(2, 4, false);
  std::set<std::vector<Subset>> seen;
  for (const auto& m : ms) EXPECT_TRUE(seen.insert(m.bases()).second);
}

TEST(Components, Examples) {
  Matroid u(4, 2, AllOfSize(4, 2));
  EXPECT_EQ(connected_components(u), std::vector<Subset>{S({1, 2, 3, 4})});

  // {1,2} parallel, 3 coloop, 4 loop.
  Matroid m(4, 2, {S({1, 3}), S({2, 3})});
  EXPECT_EQ(connected_components(m), (std::vector<Subset>{S({1, 2}), S({3}), S({4})}));
}

TEST(Components, RankIsAdditive) {
  for (const Matroid& m : enumerate_matroids(2, 5, false)) {
    auto comps = connected_components(m);
    int total = 0;
    Subset uni = 0;
    for (Subset c : comps) {
      total += m.rank(c);
      EXPECT_EQ(uni & c, 0u);
      uni |= c;
    }
    EXPECT_EQ(total, m.r());
    EXPECT_EQ(uni, (Subset{1} << 5) - 1);
  }
}

TEST(Components, DimensionFormula) {
  // dim P_M = n - #components.
  for (const Matroid& m : enumerate_matroids(3, 5, false)) {
    auto hull = affine_hull(matroid_hrep(m));
    ASSERT_TRUE(hull);
    EXPECT_EQ(hull->dim, m.n() - static_cast<int>(connected_components(m).size()));
  }
}

TEST(DegreeGeneration, HoldsForSmallMatroids) {
  for (const Matroid& m : enumerate_matroids(2, 4, true)) {
    EXPECT_TRUE(degree_d_generation(m, 2));
    EXPECT_TRUE(degree_d_generation(m, 3));
  }
  EXPECT_TRUE(degree_d_generation(matroid_from_matrix(ThreeDegs()), 2));
  EXPECT_THROW(degree_d_generation(matroid_from_matrix(ThreeDegs()), 0), Error);
}

}  // namespace
}  // namespace whsa
