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

#include "whsa/weights.h"

#include <random>

#include <gtest/gtest.h>

#include "whsa/fixtures.h"
#include "whsa/matroid.h"

namespace whsa {
namespace {

Subset S(std::initializer_list<int> one_based) {
  Subset s = 0;
  for (int i : one_based) s |= Subset{1} << (i - 1);
  return s;
}

// P_M ∩ Δ_w is nonempty iff rank(A) + b(A^c) >= r for every A.
bool MeetsOracle(const Matroid& m, const Weight& w) {
  const Subset full = (Subset{1} << m.n()) - 1;
  for (Subset a = 0; a <= full; ++a) {
    Rational rest = 0;
    for (int i = 0; i < m.n(); ++i) {
      if (!(a >> i & 1)) rest += w.b[i];
    }
    if (m.rank(a) + rest < m.r()) return false;
  }
  return true;
}

TEST(Weight, Validates) {
  EXPECT_THROW(Weight(2, {0, 1, 1}), Error);
  EXPECT_THROW(Weight(2, {Rational(3, 2), 1, 1}), Error);
  EXPECT_THROW(Weight(0, {1, 1}), Error);
  EXPECT_THROW(hypersimplex(4, 4), Error);
  EXPECT_TRUE(in_weight_domain(fixtures::example_w()));
  EXPECT_FALSE(in_weight_domain(Weight(2, {Rational(1, 2), Rational(1, 2), 1})));
  EXPECT_FALSE(in_weight_domain(Weight(2, {1, 1})));
}

TEST(Weight, HypersimplexVolume) {
  EXPECT_EQ(normalized_volume(hypersimplex(2, 4)), 4);
  EXPECT_EQ(normalized_volume(hypersimplex(1, 4)), 1);
  EXPECT_EQ(vertices(hypersimplex(2, 4)).vertices.size(), 6u);
}

TEST(Chamber, ExampleSignature) {
  ChamberSignature s(fixtures::example_w());
  EXPECT_EQ(s.wall_sign(S({1, 2}), 2), 0);
  EXPECT_EQ(s.wall_sign(S({1, 5}), 2), -1);
  EXPECT_EQ(s.wall_sign(S({1, 2, 5}), 2), 1);
  EXPECT_EQ(s.wall_sign(S({1}), 1), 0);
  EXPECT_EQ(s.wall_sign(S({5}), 1), -1);
  EXPECT_EQ(s.face_sign(0), 0);
  EXPECT_EQ(s.face_sign(4), -1);
  EXPECT_THROW(s.wall_sign(S({1}), 3), Error);
  EXPECT_THROW(s.wall_sign(S({6}), 1), Error);
}

TEST(Chamber, ExampleOrderAndPrimeClosure) {
  Weight w = fixtures::example_w();
  Weight wp = fixtures::example_w_prime();
  Weight wpp = fixtures::example_w_double_prime();
  EXPECT_EQ(weight_partial_order(wp, w), WeightOrder::kGreater);
  EXPECT_EQ(weight_partial_order(w, wpp), WeightOrder::kGreater);
  EXPECT_EQ(weight_partial_order(wpp, wp), WeightOrder::kLess);
  EXPECT_EQ(weight_partial_order(w, w), WeightOrder::kEqual);
  EXPECT_EQ(weight_partial_order(Weight(1, {1, Rational(1, 2)}), Weight(1, {Rational(1, 2), 1})),
            WeightOrder::kIncomparable);
  EXPECT_TRUE(in_chamber_closure(wp, w));
  EXPECT_FALSE(in_chamber_closure(w, wp));
  EXPECT_FALSE(same_chamber(w, wp));
}

TEST(Chamber, Identical) {
  Weight w = fixtures::example_w();
  EXPECT_TRUE(same_chamber(w, w));
  EXPECT_TRUE(in_chamber_closure(w, w));
}

TEST(Chamber, RejectsOutsideDomain) {
  Weight bad(2, {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  EXPECT_THROW(same_chamber(bad, unit_weight(2, 4)), Error);
  EXPECT_THROW(in_chamber_closure(unit_weight(2, 4), bad), Error);
}

TEST(Chamber, RelationProperties) {
  std::mt19937_64 rng(7);
  std::vector<Weight> ws;
  // Small denominators so that coincidences actually happen.
  std::uniform_int_distribution<int> num(1, 4);
  while (ws.size() < 60) {
    QVector b(4);
    for (auto& x : b) x = Rational(num(rng), 4);
    Weight w(2, b);
    if (in_weight_domain(w)) ws.push_back(w);
  }
  for (const auto& a : ws) {
    EXPECT_TRUE(same_chamber(a, a));
    for (const auto& b : ws) {
      EXPECT_EQ(same_chamber(a, b), same_chamber(b, a));
      if (same_chamber(a, b)) {
        EXPECT_TRUE(in_chamber_closure(a, b));
        EXPECT_TRUE(in_chamber_closure(b, a));
      }
      if (in_chamber_closure(a, b) && in_chamber_closure(b, a)) EXPECT_TRUE(same_chamber(a, b));
      for (const auto& c : ws) {
        if (same_chamber(a, b) && same_chamber(b, c)) EXPECT_TRUE(same_chamber(a, c));
        if (in_chamber_closure(a, b) && in_chamber_closure(b, c)) EXPECT_TRUE(in_chamber_closure(a, c));
      }
    }
  }
}

TEST(ZChamber, FeasibilityMatchesOracle) {
  auto ms = enumerate_matroids(2, 4, true);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    Weight w = sample_weight(2, 4, rng);
    HPolytope box = weighted_hypersimplex(w);
    for (const auto& m : ms) {
      EXPECT_EQ(feasible_point(intersect(matroid_hrep(m), box)).has_value(), MeetsOracle(m, w));
    }
  }
}

TEST(ZChamber, MonotoneInWeight) {
  auto ms = enumerate_matroids(2, 5, true);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 15; ++t) {
    Weight w = sample_weight(2, 5, rng);
    QVector up = w.b;
    for (auto& x : up) x = (x + 1) / 2;
    Weight wup(2, up);
    for (const auto& m : ms) {
      if (MeetsOracle(m, w)) EXPECT_TRUE(MeetsOracle(m, wup));
    }
  }
}

TEST(ZChamber, SameChamberImpliesEquivalentOnInteriorPairs) {
  auto ms = enumerate_matroids(2, 4, true);
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int t = 0; t < 200 && checked < 10; ++t) {
    Weight a = sample_weight(2, 4, rng);
    Weight b = sample_weight(2, 4, rng);
    if (!same_chamber(a, b)) continue;
    ++checked;
    EXPECT_TRUE(zchamber_equivalent(a, b, ms));
  }
  EXPECT_GT(checked, 0);
}

TEST(ZChamber, IdenticalAndMismatchedSizes) {
  auto ms = enumerate_matroids(2, 4, true);
  Weight w = unit_weight(2, 4);
  EXPECT_TRUE(zchamber_equivalent(w, w, ms));
  EXPECT_THROW(zchamber_equivalent(w, unit_weight(2, 5), ms), Error);
}

TEST(Sampler, InDomainAndDeterministic) {
  std::mt19937_64 a(20260101), b(20260101);
  for (int t = 0; t < 50; ++t) {
    Weight wa = sample_weight(3, 6, a);
    EXPECT_TRUE(in_weight_domain(wa));
    EXPECT_EQ(wa, sample_weight(3, 6, b));
  }
}

}  // namespace
}  // namespace whsa
