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

// Weights, the weight domain D(r, n) and its chamber structure.

#ifndef WHSA_WEIGHTS_H_
#define WHSA_WEIGHTS_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "whsa/matroid.h"
#include "whsa/polytope.h"
#include "whsa/rational.h"

namespace whsa {

// b = (b_1, ..., b_n) with 0 < b_i <= 1, together with the rank r.
struct Weight {
  int r = 0;
  QVector b;

  // Throws Error(kInput) unless r >= 1 and 0 < b_i <= 1.
  Weight(int r, QVector b);

  int n() const { return static_cast<int>(b.size()); }
  Rational total() const { return sum(b); }
  bool operator==(const Weight&) const = default;
};

// All ones.
Weight unit_weight(int r, int n);

// 0 <= x_i <= 1, sum x_i = r. Requires 1 <= r < n.
HPolytope hypersimplex(int r, int n);

// 0 <= x_i <= b_i, sum x_i = r. Possibly empty or degenerate.
HPolytope weighted_hypersimplex(const Weight& w);

// sum b_i > r.
bool in_weight_domain(const Weight& w);

// Signs of sum_{i in I} b_i - k for every subset I and 1 <= k <= r-1, and of
// b_i - 1 for every i.
class ChamberSignature {
 public:
  explicit ChamberSignature(const Weight& w);

  int wall_sign(Subset s, int k) const;
  int face_sign(int i) const { return faces_[i]; }
  int n() const { return n_; }
  int r() const { return r_; }

  // Sign vector over walls in (k, subset) order, then faces.
  std::vector<std::int8_t> flat() const;

  bool operator==(const ChamberSignature&) const = default;

 private:
  int n_;
  int r_;
  std::vector<std::int8_t> walls_;  // (k - 1) * 2^n + subset
  std::vector<std::int8_t> faces_;
};

ChamberSignature chamber_signature(const Weight& w);

// Identical signatures. Both weights must lie in D(r, n).
bool same_chamber(const Weight& a, const Weight& b);

// Every sign at `target` equals the sign at `source`, or the source sign is
// nonzero and the target sign is zero.
bool in_chamber_closure(const Weight& target, const Weight& source);

enum class WeightOrder { kGreater, kLess, kEqual, kIncomparable };

WeightOrder weight_partial_order(const Weight& a, const Weight& b);
const char* to_string(WeightOrder order);

enum class ZChamberRule {
  kLiteral,       // compare P ∩ Δ_w ≠ ∅ only
  kWithInterior,  // additionally compare relint(P) ∩ Δ_w ≠ ∅
};

// For every polytope P: P ∩ Δ_a is nonempty iff P ∩ Δ_b is.
bool zchamber_equivalent(const Weight& a, const Weight& b,
                         std::span<const HPolytope> polytopes,
                         ZChamberRule rule = ZChamberRule::kLiteral);
bool zchamber_equivalent(const Weight& a, const Weight& b,
                         std::span<const Matroid> matroids,
                         ZChamberRule rule = ZChamberRule::kLiteral);

// b_i = p/q with q uniform in [1, 64] and p uniform in [1, q], redrawn until
// sum b_i > r.
Weight sample_weight(int r, int n, std::mt19937_64& rng);

}  // namespace whsa

#endif  // WHSA_WEIGHTS_H_
