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

#include <array>

namespace whsa {

Weight::Weight(int r_in, QVector b_in) : r(r_in), b(std::move(b_in)) {
  if (r < 1) throw Error(ErrorKind::kInput, "rank must be positive");
  if (b.empty()) throw Error(ErrorKind::kInput, "weight must be non-empty");
  if (static_cast<int>(b.size()) > kMaxGroundSet) {
    throw Error(ErrorKind::kCap, "weight length exceeds 16");
  }
  for (const auto& bi : b) {
    if (bi <= 0 || bi > 1) throw Error(ErrorKind::kInput, "weights must lie in (0, 1]");
  }
}

Weight unit_weight(int r, int n) { return Weight(r, QVector(n, Rational(1))); }

HPolytope hypersimplex(int r, int n) {
  if (r < 1 || r >= n) throw Error(ErrorKind::kInput, "hypersimplex needs 1 <= r < n");
  return weighted_hypersimplex(unit_weight(r, n));
}

HPolytope weighted_hypersimplex(const Weight& w) {
  const int n = w.n();
  HPolytope p(n);
  for (int i = 0; i < n; ++i) p.add_bounds(i, 0, w.b[i]);
  p.add_equality(QVector(n, Rational(1)), w.r);
  return p;
}

bool in_weight_domain(const Weight& w) { return w.total() > w.r; }

ChamberSignature::ChamberSignature(const Weight& w) : n_(w.n()), r_(w.r) {
  const Subset count = Subset{1} << n_;
  std::vector<Rational> sums(count);
  for (Subset s = 1; s < count; ++s) {
    int low = __builtin_ctz(s);
    sums[s] = sums[s & (s - 1)] + w.b[low];
  }
  walls_.reserve(static_cast<std::size_t>(std::max(r_ - 1, 0)) * count);
  for (int k = 1; k < r_; ++k) {
    for (Subset s = 0; s < count; ++s) walls_.push_back(static_cast<std::int8_t>(sign(sums[s] - k)));
  }
  for (const auto& bi : w.b) faces_.push_back(static_cast<std::int8_t>(sign(bi - 1)));
}

int ChamberSignature::wall_sign(Subset s, int k) const {
  if (k < 1 || k >= r_ || (s >> n_)) throw Error(ErrorKind::kInput, "no such wall");
  return walls_[(static_cast<std::size_t>(k - 1) << n_) + s];
}

std::vector<std::int8_t> ChamberSignature::flat() const {
  std::vector<std::int8_t> out = walls_;
  out.insert(out.end(), faces_.begin(), faces_.end());
  return out;
}

ChamberSignature chamber_signature(const Weight& w) { return ChamberSignature(w); }

namespace {

void require_domain(const Weight& a, const Weight& b) {
  if (a.r != b.r || a.n() != b.n()) throw Error(ErrorKind::kInput, "weights of different (r, n)");
  if (!in_weight_domain(a) || !in_weight_domain(b)) {
    throw Error(ErrorKind::kInput, "weight outside the weight domain");
  }
}

}  // namespace

bool same_chamber(const Weight& a, const Weight& b) {
  require_domain(a, b);
  return ChamberSignature(a) == ChamberSignature(b);
}

bool in_chamber_closure(const Weight& target, const Weight& source) {
  require_domain(target, source);
  auto t = ChamberSignature(target).flat();
  auto s = ChamberSignature(source).flat();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] != s[i] && !(s[i] != 0 && t[i] == 0)) return false;
  }
  return true;
}

WeightOrder weight_partial_order(const Weight& a, const Weight& b) {
  if (a.n() != b.n()) throw Error(ErrorKind::kDimension, "weights of different length");
  bool ge = true, le = true;
  for (int i = 0; i < a.n(); ++i) {
    if (a.b[i] < b.b[i]) ge = false;
    if (a.b[i] > b.b[i]) le = false;
  }
  if (ge && le) return WeightOrder::kEqual;
  if (ge) return WeightOrder::kGreater;
  if (le) return WeightOrder::kLess;
  return WeightOrder::kIncomparable;
}

const char* to_string(WeightOrder order) {
  switch (order) {
    case WeightOrder::kGreater: return "greater";
    case WeightOrder::kLess: return "less";
    case WeightOrder::kEqual: return "equal";
    case WeightOrder::kIncomparable: return "incomparable";
  }
  return "incomparable";
}

bool zchamber_equivalent(const Weight& a, const Weight& b,
                         std::span<const HPolytope> polytopes, ZChamberRule rule) {
  if (a.n() != b.n() || a.r != b.r) throw Error(ErrorKind::kInput, "weights of different (r, n)");
  if (a == b) return true;
  HPolytope da = weighted_hypersimplex(a);
  HPolytope db = weighted_hypersimplex(b);
  for (const HPolytope& p : polytopes) {
    bool ma = feasible_point(intersect(p, da)).has_value();
    bool mb = feasible_point(intersect(p, db)).has_value();
    if (ma != mb) return false;
    if (rule == ZChamberRule::kWithInterior && ma) {
      std::array<HPolytope, 1> strict = {p};
      std::array<HPolytope, 1> wa = {da}, wb = {db};
      if (common_point(strict, wa).has_value() != common_point(strict, wb).has_value()) return false;
    }
  }
  return true;
}

bool zchamber_equivalent(const Weight& a, const Weight& b, std::span<const Matroid> matroids,
                         ZChamberRule rule) {
  std::vector<HPolytope> polys;
  polys.reserve(matroids.size());
  for (const Matroid& m : matroids) {
    if (m.n() != a.n() || m.r() != a.r) throw Error(ErrorKind::kInput, "matroid of different (r, n)");
    polys.push_back(matroid_hrep(m));
  }
  return zchamber_equivalent(a, b, polys, rule);
}

Weight sample_weight(int r, int n, std::mt19937_64& rng) {
  if (r < 1 || r >= n) throw Error(ErrorKind::kInput, "sampling needs 1 <= r < n");
  std::uniform_int_distribution<int> denom(1, 64);
  while (true) {
    QVector b(n);
    for (auto& bi : b) {
      int q = denom(rng);
      bi = Rational(std::uniform_int_distribution<int>(1, q)(rng), q);
    }
    if (sum(b) > r) return Weight(r, std::move(b));
  }
}

}  // namespace whsa
