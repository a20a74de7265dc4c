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

#include "whsa/arrangement.h"

#include <random>

#include <gtest/gtest.h>

#include "whsa/fixtures.h"
#include "whsa/suites.h"

namespace whsa {
namespace {

Subset S(std::initializer_list<int> one_based) {
  Subset s = 0;
  for (int i : one_based) s |= Subset{1} << (i - 1);
  return s;
}

using IntCols = std::vector<std::array<long long, 3>>;

// Rank of at most three integer columns in Z^3 via their minors.
int MinorRank(const IntCols& c) {
  auto cross = [](const auto& a, const auto& b) {
    return std::array<long long, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                    a[0] * b[1] - a[1] * b[0]};
  };
  int best = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != std::array<long long, 3>{0, 0, 0}) best = std::max(best, 1);
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      auto x = cross(c[i], c[j]);
      if (x != std::array<long long, 3>{0, 0, 0}) best = std::max(best, 2);
      for (std::size_t k = j + 1; k < c.size(); ++k) {
        if (x[0] * c[k][0] + x[1] * c[k][1] + x[2] * c[k][2] != 0) return 3;
      }
    }
  }
  return best;
}

IntCols Columns(const std::vector<std::array<long long, 5>>& rows, Subset s) {
  IntCols out;
  for (int j = 0; j < 5; ++j) {
    if (s >> j & 1) out.push_back({rows[0][j], rows[1][j], rows[2][j]});
  }
  return out;
}

const std::vector<std::array<long long, 5>> kThreeDegs = {
    {0, 1, 0, 1, 1}, {1, 1, 0, 0, 0}, {0, 0, 1, 1, 0}};
const std::vector<std::array<long long, 5>> kTriplePoint = {
    {1, 0, 0, 1, 1}, {0, 1, 0, 2, 1}, {0, 0, 1, 3, 0}};

// lc (klt when strict) straight from the definition with minor ranks.
bool LcOracle(const std::vector<std::array<long long, 5>>& rows, const QVector& b, bool strict) {
  for (Subset s = 1; s < 32; ++s) {
    int k = MinorRank(Columns(rows, s));
    if (k == 3) continue;
    Rational total = 0;
    for (int i = 0; i < 5; ++i) {
      if (s >> i & 1) total += b[i];
    }
    if (strict ? total >= k : total > k) return false;
  }
  return true;
}

TEST(Arrangement, BasesMatchDeterminants) {
  for (const auto* rows : {&kThreeDegs, &kTriplePoint}) {
    QMatrix m({{(*rows)[0].begin(), (*rows)[0].end()},
               {(*rows)[1].begin(), (*rows)[1].end()},
               {(*rows)[2].begin(), (*rows)[2].end()}});
    Arrangement arr(m);
    for (Subset s = 0; s < 32; ++s) EXPECT_EQ(arr.matroid().rank(s), MinorRank(Columns(*rows, s)));
  }
  const Matroid tp = fixtures::triple_point().matroid();
  for (Subset s = 0; s < 32; ++s) {
    if (subset_size(s) == 3) EXPECT_EQ(tp.is_basis(s), s != S({1, 2, 5})) << s;
  }
}

TEST(Arrangement, RejectsZeroColumn) {
  EXPECT_THROW(Arrangement(QMatrix({{1, 0, 0}, {0, 1, 0}})), Error);
  EXPECT_THROW(Arrangement(QMatrix({{1, 1, 1}, {2, 2, 2}})), Error);
}

TEST(Arrangement, VanishingSets) {
  Arrangement a = fixtures::three_degs();
  EXPECT_EQ(vanishing_set(a, fixtures::three_degs_q1()), S({1, 2, 5}));
  EXPECT_EQ(vanishing_set(a, fixtures::three_degs_q2()), S({3, 4, 5}));
  EXPECT_EQ(vanishing_set(a, {1, 2, 3}), 0u);
  EXPECT_EQ(vanishing_set(a, {-2, -4, -6}), 0u);
  EXPECT_THROW(vanishing_set(a, {0, 0, 0}), Error);
  EXPECT_THROW(vanishing_set(a, {1, 2}), Error);
}

TEST(Lc, ThreeDegsViolator) {
  LcResult r = is_lc(fixtures::three_degs(), fixtures::example_w());
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.violator.has_value());
  EXPECT_EQ(*r.violator, S({1, 2, 5}));
  EXPECT_FALSE(LcOracle(kThreeDegs, fixtures::example_w().b, false));
}

TEST(Lc, UniformUnitWeight) {
  Arrangement u(QMatrix({{1, 0, 0, 1, 1}, {0, 1, 0, 1, 2}, {0, 0, 1, 1, 3}}));
  EXPECT_EQ(u.matroid().bases().size(), 10u);
  EXPECT_TRUE(is_lc(u, unit_weight(3, 5)).holds);
  EXPECT_FALSE(is_klt(u, unit_weight(3, 5)).holds);
}

TEST(Lc, TriplePoint) {
  Weight w(3, {Rational(2, 3), Rational(2, 3), 1, 1, Rational(2, 3)});
  EXPECT_TRUE(is_lc(fixtures::triple_point(), w).holds);
  LcResult klt = is_klt(fixtures::triple_point(), w);
  EXPECT_FALSE(klt.holds);
  EXPECT_TRUE(LcOracle(kTriplePoint, w.b, false));
  EXPECT_FALSE(LcOracle(kTriplePoint, w.b, true));
}

TEST(Lc, DoubledPoint) {
  EXPECT_FALSE(is_lc(fixtures::doubled_point(), unit_weight(2, 4)).holds);
  EXPECT_EQ(*is_lc(fixtures::doubled_point(), unit_weight(2, 4)).violator, S({3, 4}));
  EXPECT_TRUE(is_lc(fixtures::doubled_point(), Weight(2, {1, 1, Rational(1, 2), Rational(1, 2)})).holds);
}

TEST(Lc, MatchesOracleOnRandomWeights) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    Weight w = sample_weight(3, 5, rng);
    EXPECT_EQ(is_lc(fixtures::three_degs(), w).holds, LcOracle(kThreeDegs, w.b, false));
    EXPECT_EQ(is_klt(fixtures::three_degs(), w).holds, LcOracle(kThreeDegs, w.b, true));
    EXPECT_EQ(is_lc(fixtures::triple_point(), w).holds, LcOracle(kTriplePoint, w.b, false));
  }
}

TEST(Lc, AtPointOnlyUsesVanishingHyperplanes) {
  Arrangement a = fixtures::three_degs();
  Weight w = unit_weight(3, 5);
  EXPECT_TRUE(is_lc_at(a, w, {1, 2, 3}).holds);
  EXPECT_TRUE(is_klt_at(a, w, {1, 2, 3}).holds);
  EXPECT_FALSE(is_lc_at(a, w, fixtures::three_degs_q1()).holds);
}

TEST(Git, ThreeDegsUnitWeight) {
  Arrangement a = fixtures::three_degs();
  Weight w = unit_weight(3, 5);
  EXPECT_FALSE(is_semistable(a, w, fixtures::three_degs_q1()));
  EXPECT_FALSE(is_semistable(a, w, fixtures::three_degs_q2()));
  GitVerdict g = git_verdict(a, w, {1, 2, 3});
  EXPECT_TRUE(g.semistable);
  ASSERT_TRUE(g.semistable_witness.has_value());
  EXPECT_TRUE(matroid_hrep(a.matroid()).contains(*g.semistable_witness));
  QVector witness = {Rational(2, 3), Rational(2, 3), Rational(2, 3), Rational(2, 3), Rational(1, 3)};
  EXPECT_TRUE(matroid_hrep(a.matroid()).contains(witness));
  EXPECT_TRUE(weighted_face(w, 0).contains(witness));
}

TEST(Git, Properties) {
  std::mt19937_64 rng(kDefaultSeed);
  const PointKind kinds[] = {PointKind::kGeneric, PointKind::kOnDivisor, PointKind::kOnIntersection};
  for (int t = 0; t < 60; ++t) {
    auto [r, n] = git_suite_sizes()[t % 4];
    Arrangement a = random_arrangement(r, n, t % 2 ? ArrangementKind::kDegenerate : ArrangementKind::kRandom, rng);
    Weight w = sample_weight(r, n, rng);
    QVector p = random_point(a, kinds[t % 3], rng);
    GitVerdict g = git_verdict(a, w, p);
    if (g.stable) EXPECT_TRUE(g.semistable);
    EXPECT_EQ(g.semistable, g.semistable_witness.has_value());
    EXPECT_EQ(g.vanishing_set, vanishing_set(a, p));
    EXPECT_EQ(MomentPolytope(a, w, p).contains(w.b), g.semistable);
    QVector scaled = p;
    for (auto& x : scaled) x *= Rational(-3, 2);
    EXPECT_EQ(git_verdict(a, w, scaled).stable, g.stable);
    if (is_klt(a, w).holds) EXPECT_TRUE(is_lc(a, w).holds);
    if (is_lc(a, w).holds) EXPECT_TRUE(is_lc_at(a, w, p).holds);
  }
}

TEST(LcLocus, ThreeDegsPoints) {
  Arrangement a = fixtures::three_degs();
  for (const auto& m : {a.matroid()}) {
    for (Subset s : m.bases()) EXPECT_TRUE(lc_locus_equals_polytope(a, indicator(s, 5)));
  }
  EXPECT_TRUE(lc_locus_equals_polytope(a, {1, 1, 0, 0, 1}));
  EXPECT_THROW(lc_locus_equals_polytope(a, {1, 1, 1, 1, 1}), Error);
}

}  // namespace
}  // namespace whsa
