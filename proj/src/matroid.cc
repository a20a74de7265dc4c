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
#include <functional>
#include <numeric>
#include <unordered_map>

#include "whsa/linalg.h"

namespace whsa {

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1) {
    if (s & 1) out.push_back(i);
  }
  return out;
}

Subset subset_of(const std::vector<int>& zero_based) {
  Subset s = 0;
  for (int i : zero_based) s |= Subset{1} << i;
  return s;
}

QVector indicator(Subset s, int n) {
  QVector v(n, Rational(0));
  for (int i : subset_elements(s)) v[i] = 1;
  return v;
}

bool check_bases(int n, int r, const std::vector<Subset>& bases) {
  if (bases.empty()) return false;
  std::vector<bool> member(std::size_t{1} << n, false);
  for (Subset b : bases) {
    if (subset_size(b) != r || (b >> n) != 0) return false;
    member[b] = true;
  }
  for (Subset b1 : bases) {
    for (Subset b2 : bases) {
      Subset only1 = b1 & ~b2;
      Subset only2 = b2 & ~b1;
      for (int x : subset_elements(only1)) {
        Subset base = b1 & ~(Subset{1} << x);
        bool ok = false;
        for (int y : subset_elements(only2)) {
          if (member[base | (Subset{1} << y)]) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

Matroid::Matroid(int n, int r, std::vector<Subset> bases, std::optional<QMatrix> realization)
    : n_(n), r_(r), bases_(std::move(bases)), realization_(std::move(realization)) {
  if (n < 1 || n > kMaxGroundSet) {
    throw Error(ErrorKind::kCap, "ground set size must be in [1, 16]");
  }
  if (r < 0 || r > n) throw Error(ErrorKind::kInput, "rank must be in [0, n]");
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  if (!check_bases(n, r, bases_)) {
    throw Error(ErrorKind::kInput, "basis family violates the exchange axiom or sizes");
  }
  const std::size_t full = std::size_t{1} << n;
  std::vector<bool> indep(full, false);
  for (Subset b : bases_) indep[b] = true;
  for (int i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < full; ++s) {
      if (!(s >> i & 1) && indep[s | (std::size_t{1} << i)]) indep[s] = true;
    }
  }
  rank_.assign(full, 0);
  for (std::size_t s = 1; s < full; ++s) {
    if (indep[s]) {
      rank_[s] = static_cast<std::int8_t>(__builtin_popcount(static_cast<unsigned>(s)));
      continue;
    }
    int best = 0;
    for (int i : subset_elements(static_cast<Subset>(s))) {
      best = std::max<int>(best, rank_[s & ~(std::size_t{1} << i)]);
    }
    rank_[s] = static_cast<std::int8_t>(best);
  }
}

bool Matroid::is_basis(Subset s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

Subset Matroid::closure(Subset s) const {
  Subset out = s;
  for (int e = 0; e < n_; ++e) {
    Subset bit = Subset{1} << e;
    if (!(s & bit) && rank_[s | bit] == rank_[s]) out |= bit;
  }
  return out;
}

std::vector<Subset> Matroid::flats() const {
  std::vector<Subset> out;
  for (Subset s = 0; s < (Subset{1} << n_); ++s) {
    if (is_flat(s)) out.push_back(s);
  }
  return out;
}

Subset Matroid::loops() const { return closure(0); }

int rank(const Matroid& m, Subset s) {
  if (s >> m.n()) throw Error(ErrorKind::kInput, "subset outside the ground set");
  return m.rank(s);
}

namespace {

// The r-subsets of [n], ordered by their element lists.
std::vector<Subset> r_subsets(int n, int r) {
  std::vector<Subset> out;
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    if (subset_size(s) == r) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
    return subset_elements(a) < subset_elements(b);
  });
  return out;
}

}  // namespace

Matroid matroid_from_matrix(const QMatrix& a) {
  const int r = a.rows();
  const int n = a.cols();
  if (r < 1 || n < 1) throw Error(ErrorKind::kInput, "matrix must be non-empty");
  if (n > kMaxGroundSet) throw Error(ErrorKind::kCap, "too many columns");
  if (rank_of(a) < r) throw Error(ErrorKind::kInput, "matrix does not have full row rank");
  std::vector<Subset> bases;
  for (Subset s : r_subsets(n, r)) {
    std::vector<QVector> cols;
    for (int j : subset_elements(s)) cols.push_back(a.col(j));
    if (!determinant(std::move(cols)).is_zero()) bases.push_back(s);
  }
  return Matroid(n, r, std::move(bases), a);
}

HPolytope matroid_hrep(const Matroid& m) {
  const int n = m.n();
  HPolytope p(n);
  for (int i = 0; i < n; ++i) p.add_bounds(i, 0, 1);
  p.add_equality(QVector(n, Rational(1)), m.r());
  const Subset full = (Subset{1} << n) - 1;
  for (Subset f : m.flats()) {
    if (f == 0 || f == full || m.rank(f) >= subset_size(f)) continue;
    p.add_inequality(indicator(f, n), m.rank(f));
  }
  return p;
}

MatroidPolytope matroid_polytope(const Matroid& m) {
  VRep vrep;
  for (Subset b : m.bases()) vrep.vertices.push_back(indicator(b, m.n()));
  std::sort(vrep.vertices.begin(), vrep.vertices.end(), lex_less);
  return {m, matroid_hrep(m), std::move(vrep)};
}

std::vector<Subset> connected_components(const Matroid& m) {
  const int n = m.n();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Subset b : m.bases()) {
    for (int e : subset_elements(b)) {
      for (int f = 0; f < n; ++f) {
        if (b >> f & 1) continue;
        if (m.is_basis((b & ~(Subset{1} << e)) | (Subset{1} << f))) {
          parent[find(e)] = find(f);
        }
      }
    }
  }
  std::vector<Subset> by_root(n, 0);
  for (int i = 0; i < n; ++i) by_root[find(i)] |= Subset{1} << i;
  std::vector<Subset> out;
  for (Subset s : by_root) {
    if (s) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) { return __builtin_ctz(a) < __builtin_ctz(b); });
  return out;
}

std::vector<Matroid> enumerate_matroids(int r, int n, bool loopless) {
  if (n < 1 || r < 0 || r > n) throw Error(ErrorKind::kInput, "invalid (r, n)");
  std::vector<Subset> subs = r_subsets(n, r);
  if (subs.size() > 20) throw Error(ErrorKind::kCap, "C(n, r) exceeds 20");
  const Subset full = (Subset{1} << n) - 1;
  std::vector<std::vector<Subset>> families;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << subs.size()); ++mask) {
    std::vector<Subset> fam;
    Subset support = 0;
    for (size_t i = 0; i < subs.size(); ++i) {
      if (mask >> i & 1) {
        fam.push_back(subs[i]);
        support |= subs[i];
      }
    }
    if (loopless && support != full) continue;
    if (check_bases(n, r, fam)) families.push_back(std::move(fam));
  }
  auto key = [](const std::vector<Subset>& fam) {
    std::vector<std::vector<int>> k;
    for (Subset s : fam) k.push_back(subset_elements(s));
    return k;
  };
  std::sort(families.begin(), families.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  std::vector<Matroid> out;
  out.reserve(families.size());
  for (auto& fam : families) out.emplace_back(n, r, std::move(fam));
  return out;
}

bool degree_d_generation(const Matroid& m, int d) {
  if (d < 1) throw Error(ErrorKind::kInput, "degree must be positive");
  const int n = m.n();
  std::vector<QVector> points = lattice_points(dilate(matroid_hrep(m), d));
  if (points.size() > 1'000'000) throw Error(ErrorKind::kCap, "too many lattice points");

  // Points have entries in [0, d]; encode them base d+1.
  std::unordered_map<std::uint64_t, bool> memo;
  auto encode = [&](const std::vector<int>& x) {
    std::uint64_t k = 0;
    for (int v : x) k = k * (d + 1) + v;
    return k;
  };
  std::function<bool(std::vector<int>&, int)> splits = [&](std::vector<int>& x, int k) {
    if (k == 0) return std::all_of(x.begin(), x.end(), [](int v) { return v == 0; });
    std::uint64_t key = encode(x) * (d + 1) + k;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    for (Subset b : m.bases()) {
      auto elems = subset_elements(b);
      if (!std::all_of(elems.begin(), elems.end(), [&](int i) { return x[i] > 0; })) continue;
      for (int i : elems) --x[i];
      ok = splits(x, k - 1);
      for (int i : elems) ++x[i];
      if (ok) break;
    }
    memo[key] = ok;
    return ok;
  };
  for (const auto& p : points) {
    std::vector<int> x(n);
    for (int i = 0; i < n; ++i) x[i] = static_cast<int>(numerator(p[i]));
    if (!splits(x, d)) return false;
  }
  return true;
}

}  // namespace whsa
