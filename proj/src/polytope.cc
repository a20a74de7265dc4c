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

#include "whsa/polytope.h"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include <boost/dynamic_bitset.hpp>

#include "whsa/linalg.h"

namespace whsa {

HPolytope::HPolytope(int ambient_dim) : dim_(ambient_dim) {
  if (ambient_dim < 1) throw Error(ErrorKind::kDimension, "ambient dimension must be >= 1");
}

HPolytope& HPolytope::add_equality(QVector a, Rational rhs) {
  if (static_cast<int>(a.size()) != dim_) {
    throw Error(ErrorKind::kDimension, "constraint length does not match ambient dimension");
  }
  eqs_.push_back({std::move(a), std::move(rhs)});
  return *this;
}

HPolytope& HPolytope::add_inequality(QVector a, Rational rhs) {
  if (static_cast<int>(a.size()) != dim_) {
    throw Error(ErrorKind::kDimension, "constraint length does not match ambient dimension");
  }
  ineqs_.push_back({std::move(a), std::move(rhs)});
  return *this;
}

HPolytope& HPolytope::add_bounds(int i, const Rational& lo, const Rational& hi) {
  QVector e(dim_, Rational(0));
  e[i] = -1;
  add_inequality(e, -lo);
  e[i] = 1;
  add_inequality(e, hi);
  return *this;
}

bool HPolytope::contains(const QVector& x) const {
  if (static_cast<int>(x.size()) != dim_) {
    throw Error(ErrorKind::kDimension, "point length does not match ambient dimension");
  }
  for (const auto& c : eqs_) {
    if (dot(c.a, x) != c.rhs) return false;
  }
  for (const auto& c : ineqs_) {
    if (dot(c.a, x) > c.rhs) return false;
  }
  return true;
}

bool lex_less(const QVector& a, const QVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

struct LexLess {
  bool operator()(const QVector& a, const QVector& b) const { return lex_less(a, b); }
};

std::vector<QVector> normals(const std::vector<Constraint>& cs) {
  std::vector<QVector> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(c.a);
  return out;
}

// Inequalities that are not implicit equalities, with parallel copies merged
// (smallest right-hand side wins) and zero rows dropped.
std::vector<Constraint> proper_inequalities(const HPolytope& poly, const AffineHull& hull) {
  std::vector<bool> implicit(poly.inequalities().size(), false);
  for (int k : hull.implicit_inequalities) implicit[k] = true;
  std::map<QVector, Rational, LexLess> merged;
  for (size_t k = 0; k < poly.inequalities().size(); ++k) {
    if (implicit[k]) continue;
    const Constraint& c = poly.inequalities()[k];
    auto nz = std::find_if(c.a.begin(), c.a.end(), [](const Rational& q) { return !q.is_zero(); });
    if (nz == c.a.end()) continue;  // 0 <= rhs, feasible hence vacuous
    Rational scale = abs(*nz);
    QVector a = c.a;
    for (auto& q : a) q /= scale;
    Rational rhs = c.rhs / scale;
    auto it = merged.find(a);
    if (it == merged.end()) {
      merged.emplace(std::move(a), std::move(rhs));
    } else if (rhs < it->second) {
      it->second = std::move(rhs);
    }
  }
  std::vector<Constraint> out;
  for (auto& [a, rhs] : merged) out.push_back({a, rhs});
  return out;
}

bool syntactically_bounded(const HPolytope& poly) {
  const int n = poly.ambient_dim();
  std::vector<bool> lo(n, false), hi(n, false);
  for (const auto& c : poly.inequalities()) {
    int idx = -1;
    bool single = true;
    for (int j = 0; j < n; ++j) {
      if (c.a[j].is_zero()) continue;
      if (idx >= 0) {
        single = false;
        break;
      }
      idx = j;
    }
    if (!single || idx < 0) continue;
    (c.a[idx] > 0 ? hi : lo)[idx] = true;
  }
  for (int j = 0; j < n; ++j) {
    if (!lo[j] || !hi[j]) return false;
  }
  return true;
}

void require_bounded(const HPolytope& poly) {
  if (syntactically_bounded(poly)) return;
  const int n = poly.ambient_dim();
  for (int j = 0; j < n; ++j) {
    QVector e(n, Rational(0));
    e[j] = 1;
    for (Sense s : {Sense::kMaximize, Sense::kMinimize}) {
      if (lp_solve(poly, e, s).status == LpStatus::kUnbounded) {
        throw Error(ErrorKind::kUnbounded, "polytope is unbounded");
      }
    }
  }
}

void require_cap(const HPolytope& poly) {
  if (poly.ambient_dim() > kMaxAmbientDim) {
    throw Error(ErrorKind::kCap, "ambient dimension exceeds enumeration cap");
  }
}

}  // namespace

std::optional<AffineHull> affine_hull(const HPolytope& poly) {
  auto x0 = feasible_point(poly);
  if (!x0) return std::nullopt;
  const auto& ineqs = poly.inequalities();
  const int m = static_cast<int>(ineqs.size());
  // 0 = unknown, 1 = implicit, -1 = slack somewhere.
  std::vector<int> state(m, 0);
  for (int k = 0; k < m; ++k) {
    if (dot(ineqs[k].a, *x0) < ineqs[k].rhs) state[k] = -1;
  }
  for (int k = 0; k < m; ++k) {
    if (state[k] != 0) continue;
    LpResult r = lp_solve(poly, ineqs[k].a, Sense::kMinimize);
    if (r.status == LpStatus::kUnbounded) {
      state[k] = -1;
    } else if (r.optimum < ineqs[k].rhs) {
      state[k] = -1;
      for (int j = k + 1; j < m; ++j) {
        if (state[j] == 0 && dot(ineqs[j].a, r.witness) < ineqs[j].rhs) state[j] = -1;
      }
    } else {
      state[k] = 1;
    }
  }
  AffineHull hull;
  RowSpace space(poly.ambient_dim());
  for (const auto& c : poly.equalities()) {
    if (space.add(c.a)) hull.equalities.push_back(c);
  }
  for (int k = 0; k < m; ++k) {
    if (state[k] != 1) continue;
    hull.implicit_inequalities.push_back(k);
    if (space.add(ineqs[k].a)) hull.equalities.push_back(ineqs[k]);
  }
  hull.dim = poly.ambient_dim() - space.rank();
  return hull;
}

std::optional<QVector> common_point(std::span<const HPolytope> strict,
                                    std::span<const HPolytope> weak) {
  int n = 0;
  for (const auto& p : strict) n = p.ambient_dim();
  for (const auto& p : weak) n = p.ambient_dim();
  if (n == 0) throw Error(ErrorKind::kInput, "common_point needs at least one polytope");
  // Variables (x, t); maximize t <= 1 with t added to every proper
  // inequality of the strict polytopes.
  HPolytope lifted(n + 1);
  auto lift = [n](const QVector& a, const Rational& t) {
    QVector b = a;
    b.push_back(t);
    return b;
  };
  bool has_slack = false;
  for (const auto& p : strict) {
    if (p.ambient_dim() != n) throw Error(ErrorKind::kDimension, "dimension mismatch");
    auto hull = affine_hull(p);
    if (!hull) return std::nullopt;
    for (const auto& c : hull->equalities) lifted.add_equality(lift(c.a, 0), c.rhs);
    for (const auto& c : proper_inequalities(p, *hull)) {
      lifted.add_inequality(lift(c.a, 1), c.rhs);
      has_slack = true;
    }
  }
  for (const auto& q : weak) {
    if (q.ambient_dim() != n) throw Error(ErrorKind::kDimension, "dimension mismatch");
    for (const auto& c : q.equalities()) lifted.add_equality(lift(c.a, 0), c.rhs);
    for (const auto& c : q.inequalities()) lifted.add_inequality(lift(c.a, 0), c.rhs);
  }
  QVector t_only(n + 1, Rational(0));
  t_only[n] = 1;
  lifted.add_inequality(t_only, 1);
  LpResult r = lp_solve(lifted, has_slack ? t_only : QVector(n + 1, Rational(0)),
                        Sense::kMaximize);
  if (!r.optimal()) return std::nullopt;
  if (has_slack && r.optimum <= 0) return std::nullopt;
  r.witness.pop_back();
  return r.witness;
}

std::optional<QVector> relint_point(const HPolytope& poly) {
  return common_point(std::span<const HPolytope>(&poly, 1), {});
}

HPolytope intersect(const HPolytope& p, const HPolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw Error(ErrorKind::kDimension, "intersect: ambient dimensions differ");
  }
  HPolytope out = p;
  for (const auto& c : q.equalities()) out.add_equality(c.a, c.rhs);
  for (const auto& c : q.inequalities()) out.add_inequality(c.a, c.rhs);
  return out;
}

namespace {

struct VertexSearch {
  const std::vector<Constraint>& eqs;    // independent hull equalities
  const std::vector<Constraint>& ineqs;  // proper inequalities
  const HPolytope& poly;
  int n;
  std::set<QVector, LexLess> found;

  void run(int start, std::vector<int>& chosen, const RowSpace& space) {
    if (space.rank() == n) {
      std::vector<QVector> a;
      QVector b;
      for (const auto& c : eqs) {
        a.push_back(c.a);
        b.push_back(c.rhs);
      }
      for (int k : chosen) {
        a.push_back(ineqs[k].a);
        b.push_back(ineqs[k].rhs);
      }
      auto x = solve_square(std::move(a), std::move(b));
      if (x && poly.contains(*x)) found.insert(std::move(*x));
      return;
    }
    const int need = n - space.rank();
    for (int k = start; k + need <= static_cast<int>(ineqs.size()); ++k) {
      RowSpace next = space;
      if (!next.add(ineqs[k].a)) continue;
      chosen.push_back(k);
      run(k + 1, chosen, next);
      chosen.pop_back();
    }
  }
};

}  // namespace

VRep vertices(const HPolytope& poly) {
  require_cap(poly);
  auto hull = affine_hull(poly);
  if (!hull) return {};
  require_bounded(poly);
  const int n = poly.ambient_dim();
  std::vector<Constraint> ineqs = proper_inequalities(poly, *hull);
  VertexSearch search{hull->equalities, ineqs, poly, n, {}};
  RowSpace space(n);
  for (const auto& c : hull->equalities) space.add(c.a);
  std::vector<int> chosen;
  search.run(0, chosen, space);
  VRep out;
  out.vertices.assign(search.found.begin(), search.found.end());
  return out;
}

std::vector<QVector> lattice_points(const HPolytope& poly) {
  require_cap(poly);
  if (!affine_hull(poly)) return {};
  require_bounded(poly);
  const int n = poly.ambient_dim();
  std::vector<Integer> lo(n), hi(n);
  Integer box = 1;
  for (int j = 0; j < n; ++j) {
    QVector e(n, Rational(0));
    e[j] = 1;
    lo[j] = ceil_of(lp_solve(poly, e, Sense::kMinimize).optimum);
    hi[j] = floor_of(lp_solve(poly, e, Sense::kMaximize).optimum);
    if (hi[j] < lo[j]) return {};
    box *= hi[j] - lo[j] + 1;
  }
  if (box > 10'000'000) throw Error(ErrorKind::kCap, "lattice-point bounding box too large");
  std::vector<QVector> out;
  QVector x(n);
  for (int j = 0; j < n; ++j) x[j] = Rational(lo[j]);
  while (true) {
    if (poly.contains(x)) out.push_back(x);
    int j = n - 1;
    while (j >= 0 && Integer(numerator(x[j])) == hi[j]) {
      x[j] = Rational(lo[j]);
      --j;
    }
    if (j < 0) break;
    x[j] += 1;
  }
  return out;  // odometer order is lexicographic
}

int affine_dim(std::span<const QVector> points) {
  if (points.empty()) return -1;
  const int n = static_cast<int>(points.front().size());
  RowSpace space(n);
  for (size_t i = 1; i < points.size(); ++i) {
    QVector d(n);
    for (int j = 0; j < n; ++j) d[j] = points[i][j] - points[0][j];
    space.add(d);
  }
  return space.rank();
}

namespace {

using VSet = boost::dynamic_bitset<>;

struct Triangulator {
  const std::vector<QVector>& verts;
  std::vector<VSet> tight;  // per proper inequality

  int dim_of(const VSet& s) const {
    std::vector<QVector> pts;
    for (auto i = s.find_first(); i != VSet::npos; i = s.find_next(i)) pts.push_back(verts[i]);
    return affine_dim(pts);
  }

  // Pulling triangulation from the lowest-index vertex.
  void run(const VSet& s, int d, std::vector<std::vector<int>>& out) const {
    const size_t v0 = s.find_first();
    if (d == 0) {
      out.push_back({static_cast<int>(v0)});
      return;
    }
    std::vector<VSet> facets;
    for (const auto& t : tight) {
      VSet f = s & t;
      if (f == s || f.none() || f.test(v0)) continue;
      if (std::find(facets.begin(), facets.end(), f) != facets.end()) continue;
      if (dim_of(f) != d - 1) continue;
      facets.push_back(std::move(f));
    }
    for (const auto& f : facets) {
      std::vector<std::vector<int>> sub;
      run(f, d - 1, sub);
      for (auto& simplex : sub) {
        simplex.push_back(static_cast<int>(v0));
        out.push_back(std::move(simplex));
      }
    }
  }
};

}  // namespace

Rational normalized_volume(const HPolytope& poly) {
  auto hull = affine_hull(poly);
  if (!hull) return 0;
  VRep vr = vertices(poly);
  const int n = poly.ambient_dim();
  const int d = hull->dim;
  if (d == 0) return 1;

  auto basis = integer_kernel(normals(hull->equalities), n);
  // Coordinates J on which the lattice basis restricts to an invertible
  // matrix; volumes are then ratios of d x d determinants.
  std::vector<int> rows_j;
  {
    RowSpace space(d);
    for (int i = 0; i < n && static_cast<int>(rows_j.size()) < d; ++i) {
      QVector r(d);
      for (int c = 0; c < d; ++c) r[c] = Rational(basis[c][i]);
      if (space.add(r)) rows_j.push_back(i);
    }
  }
  std::vector<QVector> bj(d, QVector(d));
  for (int a = 0; a < d; ++a) {
    for (int c = 0; c < d; ++c) bj[a][c] = Rational(basis[c][rows_j[a]]);
  }
  const Rational lattice_det = abs(determinant(bj));

  Triangulator tri{vr.vertices, {}};
  for (const auto& c : proper_inequalities(poly, *hull)) {
    VSet t(vr.vertices.size());
    for (size_t i = 0; i < vr.vertices.size(); ++i) {
      if (dot(c.a, vr.vertices[i]) == c.rhs) t.set(i);
    }
    tri.tight.push_back(std::move(t));
  }
  VSet all(vr.vertices.size());
  all.set();
  std::vector<std::vector<int>> simplices;
  tri.run(all, d, simplices);

  Rational total = 0;
  for (const auto& s : simplices) {
    const QVector& apex = vr.vertices[s.back()];
    std::vector<QVector> m(d, QVector(d));
    for (int e = 0; e < d; ++e) {
      for (int a = 0; a < d; ++a) m[a][e] = vr.vertices[s[e]][rows_j[a]] - apex[rows_j[a]];
    }
    total += abs(determinant(std::move(m)));
  }
  return total / lattice_det;
}

Rational normalized_volume_in_dim(const HPolytope& poly, int dim) {
  auto hull = affine_hull(poly);
  if (!hull || hull->dim != dim) return 0;
  return normalized_volume(poly);
}

bool contained_in(const HPolytope& p, const HPolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw Error(ErrorKind::kDimension, "containment: ambient dimensions differ");
  }
  auto x = feasible_point(p);
  if (!x) return true;
  if (!q.contains(*x)) return false;
  for (const auto& c : q.inequalities()) {
    LpResult r = lp_solve(p, c.a, Sense::kMaximize);
    if (!r.optimal() || r.optimum > c.rhs) return false;
  }
  for (const auto& c : q.equalities()) {
    for (Sense s : {Sense::kMaximize, Sense::kMinimize}) {
      LpResult r = lp_solve(p, c.a, s);
      if (!r.optimal() || r.optimum != c.rhs) return false;
    }
  }
  return true;
}

bool polytopes_equal(const HPolytope& p, const HPolytope& q) {
  return contained_in(p, q) && contained_in(q, p);
}

HPolytope minimal_face(const HPolytope& poly, const QVector& x) {
  if (!poly.contains(x)) throw Error(ErrorKind::kInput, "minimal_face: point not in polytope");
  HPolytope face(poly.ambient_dim());
  for (const auto& c : poly.equalities()) face.add_equality(c.a, c.rhs);
  for (const auto& c : poly.inequalities()) {
    if (dot(c.a, x) == c.rhs) {
      face.add_equality(c.a, c.rhs);
    } else {
      face.add_inequality(c.a, c.rhs);
    }
  }
  return face;
}

int direction_sum_dim(const HPolytope& p, const HPolytope& q) {
  auto hp = affine_hull(p);
  auto hq = affine_hull(q);
  if (!hp || !hq) throw Error(ErrorKind::kInput, "direction_sum_dim: empty polytope");
  const int n = p.ambient_dim();
  auto rows_p = normals(hp->equalities);
  auto rows_q = normals(hq->equalities);
  std::vector<QVector> both = rows_p;
  both.insert(both.end(), rows_q.begin(), rows_q.end());
  // dim(ker P + ker Q) = dim ker P + dim ker Q - dim(ker P ∩ ker Q).
  return (n - static_cast<int>(rows_p.size())) + (n - static_cast<int>(rows_q.size())) -
         (n - rank_of(both, n));
}

HPolytope dilate(const HPolytope& poly, const Rational& factor) {
  HPolytope out(poly.ambient_dim());
  for (const auto& c : poly.equalities()) out.add_equality(c.a, c.rhs * factor);
  for (const auto& c : poly.inequalities()) out.add_inequality(c.a, c.rhs * factor);
  return out;
}

}  // namespace whsa
