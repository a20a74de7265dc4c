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

#include <algorithm>
#include <array>

namespace whsa {
namespace {

QMatrix validated(QMatrix forms) {
  for (int j = 0; j < forms.cols(); ++j) {
    auto col = forms.col(j);
    if (std::all_of(col.begin(), col.end(), [](const Rational& v) { return v.is_zero(); })) {
      throw Error(ErrorKind::kInput,
                  "column " + std::to_string(j + 1) + " is zero: B_i is not a divisor");
    }
  }
  return forms;
}

void require_sizes(const Arrangement& arr, const Weight& w) {
  if (w.n() != arr.n() || w.r != arr.r()) {
    throw Error(ErrorKind::kInput, "weight does not match the arrangement's (r, n)");
  }
}

// Nonempty subsets of `within`, by size and then by element list.
std::vector<Subset> ordered_subsets(Subset within) {
  std::vector<Subset> out;
  for (Subset s = within; s; s = (s - 1) & within) out.push_back(s);
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
    if (subset_size(a) != subset_size(b)) return subset_size(a) < subset_size(b);
    return subset_elements(a) < subset_elements(b);
  });
  return out;
}

}  // namespace

Arrangement::Arrangement(QMatrix forms)
    : forms_(validated(std::move(forms))), matroid_(matroid_from_matrix(forms_)) {}

Arrangement arrangement_from_matrix(const QMatrix& forms) { return Arrangement(forms); }

Subset vanishing_set(const Arrangement& arr, const QVector& p) {
  if (static_cast<int>(p.size()) != arr.r()) {
    throw Error(ErrorKind::kDimension, "point must have r coordinates");
  }
  if (std::all_of(p.begin(), p.end(), [](const Rational& v) { return v.is_zero(); })) {
    throw Error(ErrorKind::kInput, "the zero vector is not a projective point");
  }
  Subset out = 0;
  for (int i = 0; i < arr.n(); ++i) {
    if (dot(p, arr.forms().col(i)).is_zero()) out |= Subset{1} << i;
  }
  return out;
}

LcResult lc_inequalities(const Matroid& m, const QVector& b, bool strict, Subset within) {
  for (Subset s : ordered_subsets(within)) {
    Rational total = 0;
    for (int i : subset_elements(s)) total += b[i];
    int k = m.rank(s);
    if (k == m.r()) continue;  // empty intersection in P^{r-1}
    if (strict ? total >= k : total > k) return {false, s};
  }
  return {true, std::nullopt};
}

LcResult is_lc(const Arrangement& arr, const Weight& w) {
  require_sizes(arr, w);
  return lc_inequalities(arr.matroid(), w.b, false, (Subset{1} << arr.n()) - 1);
}

LcResult is_klt(const Arrangement& arr, const Weight& w) {
  require_sizes(arr, w);
  return lc_inequalities(arr.matroid(), w.b, true, (Subset{1} << arr.n()) - 1);
}

LcResult is_lc_at(const Arrangement& arr, const Weight& w, const QVector& p) {
  require_sizes(arr, w);
  return lc_inequalities(arr.matroid(), w.b, false, vanishing_set(arr, p));
}

LcResult is_klt_at(const Arrangement& arr, const Weight& w, const QVector& p) {
  require_sizes(arr, w);
  return lc_inequalities(arr.matroid(), w.b, true, vanishing_set(arr, p));
}

HPolytope weighted_face(const Weight& w, Subset s) {
  HPolytope face = weighted_hypersimplex(w);
  for (int i : subset_elements(s)) {
    if (i >= w.n()) throw Error(ErrorKind::kInput, "subset outside the ground set");
    QVector e(w.n(), Rational(0));
    e[i] = 1;
    face.add_equality(std::move(e), w.b[i]);
  }
  return face;
}

GitVerdict git_verdict(const Arrangement& arr, const Weight& w, const QVector& p) {
  require_sizes(arr, w);
  GitVerdict v;
  v.vanishing_set = vanishing_set(arr, p);
  v.face = weighted_face(w, v.vanishing_set);
  HPolytope pv = matroid_hrep(arr.matroid());
  v.semistable_witness = feasible_point(intersect(pv, v.face));
  v.semistable = v.semistable_witness.has_value();
  if (!v.semistable) return v;
  std::array<HPolytope, 2> both = {pv, v.face};
  v.stable_witness = common_point(both, {});
  if (v.stable_witness) {
    v.direction_sum_dim = direction_sum_dim(pv, v.face);
    v.stable = v.direction_sum_dim == arr.n() - 1;
  }
  return v;
}

bool is_semistable(const Arrangement& arr, const Weight& w, const QVector& p) {
  return git_verdict(arr, w, p).semistable;
}

bool is_stable(const Arrangement& arr, const Weight& w, const QVector& p) {
  return git_verdict(arr, w, p).stable;
}

MomentPolytope::MomentPolytope(const Arrangement& arr, const Weight& w, const QVector& p)
    : n_(arr.n()), lifted_(3 * arr.n()) {
  require_sizes(arr, w);
  const int n = n_;
  const Rational scale = w.total() - w.r;
  if (scale < 0) throw Error(ErrorKind::kInput, "moment polytope needs |w| >= r");
  Subset vanishing = vanishing_set(arr, p);
  // Coordinates: x in [0, n), y in [n, 2n), s in [2n, 3n).
  auto lift = [&](const QVector& a, int offset) {
    QVector out(3 * n, Rational(0));
    for (int i = 0; i < n; ++i) out[offset + i] = a[i];
    return out;
  };
  HPolytope pv = matroid_hrep(arr.matroid());
  for (const auto& c : pv.equalities()) lifted_.add_equality(lift(c.a, n), c.rhs);
  for (const auto& c : pv.inequalities()) lifted_.add_inequality(lift(c.a, n), c.rhs);
  QVector ones(3 * n, Rational(0));
  for (int i = 0; i < n; ++i) {
    QVector e(3 * n, Rational(0));
    e[2 * n + i] = -1;
    lifted_.add_inequality(e, 0);
    if (vanishing >> i & 1) {
      e[2 * n + i] = 1;
      lifted_.add_equality(e, 0);
    }
    ones[2 * n + i] = 1;
    QVector link(3 * n, Rational(0));  // x_i - y_i - scale * s_i = 0
    link[i] = 1;
    link[n + i] = -1;
    link[2 * n + i] = -scale;
    lifted_.add_equality(std::move(link), 0);
  }
  lifted_.add_equality(std::move(ones), 1);
}

bool MomentPolytope::contains(const QVector& x) const {
  if (static_cast<int>(x.size()) != n_) throw Error(ErrorKind::kDimension, "point length");
  HPolytope fixed = lifted_;
  for (int i = 0; i < n_; ++i) {
    QVector e(3 * n_, Rational(0));
    e[i] = 1;
    fixed.add_equality(std::move(e), x[i]);
  }
  return feasible_point(fixed).has_value();
}

bool lc_locus_equals_polytope(const Arrangement& arr, const QVector& x) {
  const int n = arr.n();
  if (static_cast<int>(x.size()) != n) throw Error(ErrorKind::kDimension, "point length");
  for (const auto& xi : x) {
    if (xi < 0 || xi > 1) throw Error(ErrorKind::kInput, "coefficients must lie in [0, 1]");
  }
  if (sum(x) != arr.r()) throw Error(ErrorKind::kInput, "coefficients must sum to r");
  Subset support = 0;
  for (int i = 0; i < n; ++i) {
    if (!x[i].is_zero()) support |= Subset{1} << i;
  }
  bool in_polytope = matroid_hrep(arr.matroid()).contains(x);
  bool lc = lc_inequalities(arr.matroid(), x, false, support).holds;
  return in_polytope == lc;
}

}  // namespace whsa
