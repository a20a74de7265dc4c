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

#include "whsa/suites.h"

#include <algorithm>
#include <array>
#include <map>

#include "whsa/linalg.h"
#include "whsa/tiling.h"

namespace whsa {
namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

int nonzero(std::mt19937_64& rng, int bound) {
  int v = uniform(rng, 1, bound);
  return uniform(rng, 0, 1) ? v : -v;
}

// Random nonzero combination of the given basis vectors.
QVector combination(const std::vector<QVector>& basis, std::mt19937_64& rng) {
  while (true) {
    QVector v(basis.front().size(), Rational(0));
    for (const auto& b : basis) {
      Rational c = uniform(rng, -4, 4);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
    }
    if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); })) return v;
  }
}

class Recorder {
 public:
  explicit Recorder(SuiteResult& out) : out_(out) {}

  void fail(Json example) {
    ++out_.mismatches;
    if (static_cast<int>(out_.counterexamples.size()) < kMaxCounterexamples) {
      out_.counterexamples.push_back(std::move(example));
    }
  }
  void count(const std::string& key) {
    auto& v = out_.stats[key];
    v = v.is_null() ? 1 : v.get<int>() + 1;
  }

 private:
  SuiteResult& out_;
};

Json size_json(int r, int n) { return {{"r", r}, {"n", n}}; }

}  // namespace

Arrangement random_arrangement(int r, int n, ArrangementKind kind, std::mt19937_64& rng) {
  if (r < 1 || r > n || n > kMaxGroundSet) throw Error(ErrorKind::kInput, "invalid (r, n)");
  while (true) {
    std::vector<QVector> rows(r, QVector(n));
    for (auto& row : rows) {
      for (auto& x : row) x = uniform(rng, -3, 3);
    }
    if (kind == ArrangementKind::kDegenerate && r >= 2) {
      int changes = uniform(rng, 1, 2);
      for (int c = 0; c < changes; ++c) {
        int target = uniform(rng, 0, n - 1);
        int sources = uniform(rng, 1, r - 1);
        std::vector<int> pool;
        for (int j = 0; j < n; ++j) {
          if (j != target) pool.push_back(j);
        }
        std::shuffle(pool.begin(), pool.end(), rng);
        for (int i = 0; i < r; ++i) rows[i][target] = 0;
        for (int s = 0; s < sources; ++s) {
          Rational coef = nonzero(rng, 2);
          for (int i = 0; i < r; ++i) rows[i][target] += coef * rows[i][pool[s]];
        }
      }
    }
    QMatrix m(rows);
    bool zero_col = false;
    for (int j = 0; j < n; ++j) {
      auto col = m.col(j);
      zero_col = zero_col || std::all_of(col.begin(), col.end(), [](const Rational& x) { return x.is_zero(); });
    }
    if (zero_col || rank_of(m) < r) continue;
    return Arrangement(std::move(m));
  }
}

QVector random_point(const Arrangement& arr, PointKind kind, std::mt19937_64& rng) {
  const int r = arr.r();
  const int n = arr.n();
  int hyperplanes = 0;
  if (kind == PointKind::kOnDivisor) hyperplanes = 1;
  if (kind == PointKind::kOnIntersection) hyperplanes = r >= 3 ? uniform(rng, 2, r - 1) : 1;
  while (true) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<QVector> forms;
    for (int k = 0; k < hyperplanes; ++k) forms.push_back(arr.forms().col(idx[k]));
    std::vector<QVector> basis;
    if (forms.empty()) {
      for (int i = 0; i < r; ++i) {
        QVector e(r, Rational(0));
        e[i] = 1;
        basis.push_back(e);
      }
    } else {
      basis = nullspace(forms, r);
    }
    if (basis.empty()) continue;
    return combination(basis, rng);
  }
}

std::vector<std::pair<int, int>> git_suite_sizes() { return {{2, 4}, {2, 5}, {3, 5}, {3, 6}}; }
std::vector<std::pair<int, int>> chamber_suite_sizes() { return {{2, 4}, {2, 5}, {3, 5}}; }

SuiteResult run_git_lc_equiv(std::uint64_t seed, int trials) {
  SuiteResult out;
  out.name = "git-lc-equiv";
  out.seed = seed;
  out.trials = trials;
  Recorder rec(out);
  std::mt19937_64 rng(seed);
  const auto sizes = git_suite_sizes();
  constexpr std::array<PointKind, 3> kPointKinds = {PointKind::kGeneric, PointKind::kOnDivisor,
                                                    PointKind::kOnIntersection};
  constexpr std::array<const char*, 3> kPointNames = {"generic", "on_divisor", "on_intersection"};
  for (int t = 0; t < trials; ++t) {
    auto [r, n] = sizes[t % sizes.size()];
    ArrangementKind kind = (t / sizes.size()) % 2 ? ArrangementKind::kDegenerate : ArrangementKind::kRandom;
    int pk = static_cast<int>((t / (2 * sizes.size())) % 3);
    Arrangement arr = random_arrangement(r, n, kind, rng);
    Weight w = sample_weight(r, n, rng);
    QVector p = random_point(arr, kPointKinds[pk], rng);
    rec.count(kPointNames[pk]);
    rec.count(kind == ArrangementKind::kDegenerate ? "degenerate" : "random");

    GitVerdict v = git_verdict(arr, w, p);
    bool lc_at = is_lc_at(arr, w, p).holds;
    bool klt_at = is_klt_at(arr, w, p).holds;
    HPolytope pv = matroid_hrep(arr.matroid());
    HPolytope window = weighted_hypersimplex(w);
    bool meets = feasible_point(intersect(pv, window)).has_value();
    std::array<HPolytope, 1> strict = {window};
    std::array<HPolytope, 1> weak = {pv};
    bool meets_interior = common_point(strict, weak).has_value();

    auto example = [&](const char* what) {
      return Json{{"check", what},
                  {"size", size_json(r, n)},
                  {"arrangement", to_json(arr)},
                  {"weight", to_json(w)},
                  {"point", to_json(p)},
                  {"vanishing_set", subset_to_json(v.vanishing_set)},
                  {"semistable", v.semistable},
                  {"stable", v.stable},
                  {"lc_at", lc_at},
                  {"klt_at", klt_at}};
    };
    if (v.stable && !v.semistable) rec.fail(example("stable implies semistable"));
    if (meets) {
      rec.count("semistable_checked");
      rec.count(v.semistable ? "semistable_true" : "semistable_false");
      if (v.semistable != lc_at) rec.fail(example("semistable == lc_at"));
    }
    if (meets_interior) {
      rec.count("stable_checked");
      rec.count(v.stable ? "stable_true" : "stable_false");
      if (v.stable != klt_at) rec.fail(example("stable == klt_at"));
    }
    if (w.total() > w.r) {
      bool in_moment = MomentPolytope(arr, w, p).contains(w.b);
      if (in_moment != v.semistable) rec.fail(example("w in moment polytope == semistable"));
    }
    QVector scaled = p;
    for (auto& x : scaled) x *= Rational(-3, 2);
    GitVerdict vs = git_verdict(arr, w, scaled);
    if (vs.semistable != v.semistable || vs.stable != v.stable ||
        vs.vanishing_set != v.vanishing_set || is_lc_at(arr, w, scaled).holds != lc_at) {
      rec.fail(example("scale invariance"));
    }
  }
  return out;
}

SuiteResult run_chamber_coincide(std::uint64_t seed, int trials,
                                 const std::vector<std::pair<int, int>>& sizes) {
  SuiteResult out;
  out.name = "chamber-coincide";
  out.seed = seed;
  out.trials = trials;
  Recorder rec(out);
  std::mt19937_64 rng(seed);
  std::map<std::pair<int, int>, std::vector<HPolytope>> polys;
  for (auto [r, n] : sizes) {
    auto& list = polys[{r, n}];
    for (const Matroid& m : enumerate_matroids(r, n, true)) list.push_back(matroid_hrep(m));
    out.stats["matroids_" + std::to_string(r) + "_" + std::to_string(n)] = list.size();
  }
  for (int t = 0; t < trials; ++t) {
    auto [r, n] = sizes[t % sizes.size()];
    Weight a = sample_weight(r, n, rng);
    Weight b = a;
    bool neighbour = (t / sizes.size()) % 2 == 1;
    if (neighbour) {
      // Each coordinate moves to the nearest fraction with a fresh
      // denominator in [1, 64]; this keeps many pairs in one chamber.
      while (true) {
        QVector nb(n);
        for (int i = 0; i < n; ++i) {
          int q = uniform(rng, 1, 64);
          Integer p = floor_of(a.b[i] * q + Rational(1, 2));
          if (p < 1) p = 1;
          if (p > q) p = q;
          nb[i] = Rational(p, q);
        }
        Weight cand(r, nb);
        if (in_weight_domain(cand)) {
          b = std::move(cand);
          break;
        }
      }
    } else {
      b = sample_weight(r, n, rng);
    }
    bool sig = same_chamber(a, b);
    bool z = zchamber_equivalent(a, b, polys[{r, n}]);
    bool zi = zchamber_equivalent(a, b, polys[{r, n}], ZChamberRule::kWithInterior);
    if (sig != zi) rec.count("interior_rule_disagrees");
    rec.count(neighbour ? "neighbour_pairs" : "independent_pairs");
    rec.count(sig ? "same_chamber" : "different_chamber");
    if (sig != z) {
      rec.count(sig ? "same_chamber_but_z_differs" : "z_equal_but_chamber_differs");
      rec.fail({{"size", size_json(r, n)},
                {"w", to_json(a)},
                {"w_prime", to_json(b)},
                {"same_chamber", sig},
                {"zchamber_equivalent", z}});
    }
  }
  return out;
}

SuiteResult run_degree_gen(const std::vector<std::pair<int, int>>& sizes,
                           const std::vector<int>& degrees) {
  SuiteResult out;
  out.name = "degree-gen";
  Recorder rec(out);
  for (auto [r, n] : sizes) {
    for (const Matroid& m : enumerate_matroids(r, n, true)) {
      for (int d : degrees) {
        ++out.trials;
        if (!degree_d_generation(m, d)) rec.fail({{"matroid", to_json(m)}, {"d", d}});
      }
    }
  }
  return out;
}

SuiteResult run_reconstruct_roundtrip(std::uint64_t seed, int trials) {
  SuiteResult out;
  out.name = "reconstruct-roundtrip";
  out.seed = seed;
  out.trials = trials;
  Recorder rec(out);
  std::mt19937_64 rng(seed);
  const auto sizes = git_suite_sizes();
  for (int t = 0; t < trials; ++t) {
    auto [r, n] = sizes[t % sizes.size()];
    ArrangementKind kind = (t / sizes.size()) % 2 ? ArrangementKind::kDegenerate : ArrangementKind::kRandom;
    while (true) {
      Arrangement arr = random_arrangement(r, n, kind, rng);
      std::optional<HPolytope> target;
      std::optional<Weight> w;
      for (int attempt = 0; attempt < 20 && !target; ++attempt) {
        w = sample_weight(r, n, rng);
        target = weighted_polytope(arr.matroid(), *w);
      }
      if (!target) {
        rec.count("arrangements_redrawn");
        continue;
      }
      HPolytope rebuilt = reconstruct_polytope(incidence_of(arr), *w);
      if (!polytopes_equal(rebuilt, *target)) {
        rec.fail({{"size", size_json(r, n)}, {"arrangement", to_json(arr)}, {"weight", to_json(*w)}});
      }
      break;
    }
  }
  return out;
}

Json to_json(const SuiteResult& s) {
  Json ce = Json::array();
  for (const auto& c : s.counterexamples) ce.push_back(c);
  return {{"suite", s.name},     {"seed", s.seed},   {"trials", s.trials},
          {"mismatches", s.mismatches}, {"passed", s.passed()}, {"stats", s.stats},
          {"counterexamples", ce}};
}

}  // namespace whsa
