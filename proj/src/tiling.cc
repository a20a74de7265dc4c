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

#include "whsa/tiling.h"

#include <algorithm>
#include <array>
#include <set>

#include <boost/dynamic_bitset.hpp>

namespace whsa {
namespace {

constexpr std::size_t kMaxFaces = 100'000;

void require_compatible(const WeightedTiling& t) {
  for (const Matroid& m : t.tiles) {
    if (m.n() != t.weight.n() || m.r() != t.weight.r) {
      throw Error(ErrorKind::kInput, "tile (r, n) differs from the weight's");
    }
  }
}

std::vector<std::optional<HPolytope>> pieces_of(const WeightedTiling& t) {
  std::vector<std::optional<HPolytope>> out;
  for (const Matroid& m : t.tiles) out.push_back(weighted_polytope(m, t.weight));
  return out;
}

int hull_dim(const HPolytope& p) {
  auto hull = affine_hull(p);
  return hull ? hull->dim : -1;
}

QVector centroid(const std::vector<QVector>& pts) {
  QVector c(pts.front().size(), Rational(0));
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
  }
  for (auto& ci : c) ci /= static_cast<long>(pts.size());
  return c;
}

bool vertex_lists_less(const std::vector<QVector>& a, const std::vector<QVector>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
}

// All nonempty faces of a polytope as vertex subsets: closure of the tight
// sets of its inequalities under intersection.
std::vector<boost::dynamic_bitset<>> face_sets(const HPolytope& poly,
                                               const std::vector<QVector>& verts) {
  using Bits = boost::dynamic_bitset<>;
  std::vector<Bits> tight;
  for (const auto& c : poly.inequalities()) {
    Bits b(verts.size());
    for (std::size_t v = 0; v < verts.size(); ++v) {
      if (dot(c.a, verts[v]) == c.rhs) b.set(v);
    }
    if (b.any() && !b.all()) tight.push_back(std::move(b));
  }
  Bits full(verts.size());
  full.set();
  std::set<Bits> seen = {full};
  std::vector<Bits> stack = {full};
  while (!stack.empty()) {
    Bits f = std::move(stack.back());
    stack.pop_back();
    for (const Bits& t : tight) {
      Bits g = f & t;
      if (g.none() || g == f) continue;
      if (seen.insert(g).second) {
        if (seen.size() > kMaxFaces) throw Error(ErrorKind::kCap, "face count exceeds 10^5");
        stack.push_back(std::move(g));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::optional<HPolytope> weighted_polytope(const Matroid& m, const Weight& w) {
  if (m.n() != w.n() || m.r() != w.r) throw Error(ErrorKind::kInput, "matroid and weight differ in (r, n)");
  std::array<HPolytope, 1> strict = {matroid_hrep(m)};
  std::array<HPolytope, 1> weak = {weighted_hypersimplex(w)};
  if (!common_point(strict, weak)) return std::nullopt;
  return intersect(strict[0], weak[0]);
}

ValidationReport validate_tiling(const WeightedTiling& t) {
  require_compatible(t);
  ValidationReport rep;
  auto pieces = pieces_of(t);
  HPolytope window = weighted_hypersimplex(t.weight);
  const int dim = hull_dim(window);
  rep.window_volume = dim >= 0 ? normalized_volume(window) : Rational(0);
  rep.face_fitting = true;
  rep.interiors_disjoint = true;
  bool all_accepted = !pieces.empty();
  for (const auto& piece : pieces) {
    rep.tile_accepted.push_back(piece.has_value());
    all_accepted = all_accepted && piece.has_value();
    Rational vol = piece ? normalized_volume_in_dim(*piece, dim) : Rational(0);
    rep.volume_sum += vol;
    rep.piece_volumes.push_back(std::move(vol));
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (!pieces[i] || !pieces[j]) continue;
      PairCheck pc;
      pc.i = static_cast<int>(i);
      pc.j = static_cast<int>(j);
      HPolytope meet = intersect(*pieces[i], *pieces[j]);
      pc.intersection_dim = hull_dim(meet);
      if (pc.intersection_dim < 0) {
        pc.face_fitting = true;
        pc.interiors_disjoint = true;
      } else {
        QVector x = *relint_point(meet);
        pc.face_fitting = polytopes_equal(minimal_face(*pieces[i], x), meet) &&
                          polytopes_equal(minimal_face(*pieces[j], x), meet);
        std::array<HPolytope, 2> both = {*pieces[i], *pieces[j]};
        pc.interiors_disjoint = !common_point(both, {}).has_value();
      }
      rep.face_fitting = rep.face_fitting && pc.face_fitting;
      rep.interiors_disjoint = rep.interiors_disjoint && pc.interiors_disjoint;
      rep.pairs.push_back(pc);
    }
  }
  rep.volumes_match = dim >= 0 && rep.volume_sum == rep.window_volume;
  rep.valid = all_accepted && rep.face_fitting && rep.interiors_disjoint && rep.volumes_match;
  return rep;
}

ParentCover parent_cover(const WeightedTiling& t) {
  require_compatible(t);
  ParentCover pc;
  const int n = t.weight.n();
  const int r = t.weight.r;
  for (const Matroid& m : t.tiles) pc.parents.push_back(matroid_hrep(m));
  HPolytope whole = weighted_hypersimplex(unit_weight(r, n));
  const int dim = hull_dim(whole);
  pc.hypersimplex_volume = normalized_volume(whole);
  for (const auto& p : pc.parents) pc.volume_sum += normalized_volume_in_dim(p, dim);
  for (std::size_t i = 0; i < pc.parents.size(); ++i) {
    for (std::size_t j = i + 1; j < pc.parents.size(); ++j) {
      if (hull_dim(intersect(pc.parents[i], pc.parents[j])) == dim) {
        pc.overlaps.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  pc.covers = pc.overlaps.empty() && pc.volume_sum == pc.hypersimplex_volume;
  return pc;
}

StrataPoset strata_poset(const WeightedTiling& t) {
  require_compatible(t);
  const Weight& w = t.weight;
  const int n = w.n();
  auto pieces = pieces_of(t);
  HPolytope window = weighted_hypersimplex(w);
  auto window_hull = affine_hull(window);
  std::vector<bool> window_implicit(window.inequalities().size(), false);
  if (window_hull) {
    for (int k : window_hull->implicit_inequalities) window_implicit[k] = true;
  }

  struct Entry {
    StrataCell cell;
    bool interior = false;
  };
  std::vector<Entry> entries;
  auto find_entry = [&](const std::vector<QVector>& verts) -> Entry* {
    for (auto& e : entries) {
      if (e.cell.vertices == verts) return &e;
    }
    return nullptr;
  };

  StrataPoset poset;
  for (std::size_t tile = 0; tile < pieces.size(); ++tile) {
    if (!pieces[tile]) continue;
    const HPolytope& piece = *pieces[tile];
    const std::vector<QVector> verts = vertices(piece).vertices;
    const int piece_dim = hull_dim(piece);

    for (const auto& bits : face_sets(piece, verts)) {
      std::vector<QVector> fv;
      for (std::size_t v = 0; v < verts.size(); ++v) {
        if (bits.test(v)) fv.push_back(verts[v]);
      }
      if (Entry* e = find_entry(fv)) {
        e->cell.tiles.push_back(static_cast<int>(tile));
        continue;
      }
      // A valid inequality tight at a relative-interior point is tight on the
      // whole face, so the centroid decides every relint question.
      QVector c = centroid(fv);
      bool interior = true;
      for (std::size_t k = 0; k < window.inequalities().size(); ++k) {
        const auto& con = window.inequalities()[k];
        if (!window_implicit[k] && dot(con.a, c) == con.rhs) interior = false;
      }
      bool positive = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x > 0; });
      if (!interior && !positive) continue;
      Entry e;
      e.interior = interior;
      e.cell.polytope = minimal_face(piece, c);
      e.cell.vertices = std::move(fv);
      e.cell.dim = affine_dim(e.cell.vertices);
      e.cell.shifted_dim = e.cell.dim - (n - w.r);
      e.cell.tiles = {static_cast<int>(tile)};
      e.cell.divisor = !interior;
      for (int i = 0; i < n; ++i) {
        if (c[i] == w.b[i]) e.cell.on_faces |= Subset{1} << i;
      }
      entries.push_back(std::move(e));
    }

    for (int i = 0; i < n; ++i) {
      QVector unit(n, Rational(0));
      unit[i] = 1;
      HPolytope face = piece;
      face.add_equality(unit, w.b[i]);
      DivisorFace df;
      df.tile = static_cast<int>(tile);
      df.element = i;
      int d = hull_dim(face);
      if (d >= 0) {
        df.dim = d;
        df.codim = piece_dim - d;
      }
      poset.divisor_faces.push_back(df);
    }
  }

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.interior != b.interior) return a.interior;
    if (a.cell.dim != b.cell.dim) return a.cell.dim > b.cell.dim;
    return vertex_lists_less(a.cell.vertices, b.cell.vertices);
  });
  for (auto& e : entries) {
    if (e.interior) ++poset.interior_count;
    poset.cells.push_back(std::move(e.cell));
  }
  for (std::size_t a = 0; a < poset.cells.size(); ++a) {
    for (std::size_t b = 0; b < poset.cells.size(); ++b) {
      const auto& va = poset.cells[a].vertices;
      const auto& vb = poset.cells[b].vertices;
      if (a != b && va.size() < vb.size() &&
          std::includes(vb.begin(), vb.end(), va.begin(), va.end(), lex_less)) {
        poset.relation.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return poset;
}

DivisorIncidence incidence_of(const Matroid& m) {
  DivisorIncidence inc;
  inc.r = m.r();
  inc.n = m.n();
  for (Subset s = 1; s < (Subset{1} << m.n()); ++s) {
    if (subset_size(s) > m.r()) continue;
    int k = m.rank(s);
    inc.records[s] = k == m.r() ? std::nullopt : std::optional<int>(k);
  }
  return inc;
}

DivisorIncidence incidence_of(const Arrangement& arr) { return incidence_of(arr.matroid()); }

HPolytope reconstruct_polytope(const DivisorIncidence& inc, const Weight& w) {
  const int n = inc.n;
  const int r = inc.r;
  if (w.n() != n || w.r != r) throw Error(ErrorKind::kInput, "weight does not match the incidence data");
  const Subset count = Subset{1} << n;
  std::vector<int> codim(count, 0);
  for (Subset s = 1; s < count; ++s) {
    const int size = subset_size(s);
    if (size > r) {
      // Any independent subset of s lies in an r-subset of s.
      int best = 0;
      for (int i : subset_elements(s)) best = std::max(best, codim[s & ~(Subset{1} << i)]);
      codim[s] = best;
      continue;
    }
    auto it = inc.records.find(s);
    if (it == inc.records.end()) {
      throw Error(ErrorKind::kInput, "missing incidence record for a subset of size <= r");
    }
    int k = it->second.value_or(r);
    if (it->second && (k < 0 || k > r - 1)) throw Error(ErrorKind::kInput, "codimension out of range");
    if (k > size) throw Error(ErrorKind::kInput, "codimension exceeds the number of divisors");
    for (int i : subset_elements(s)) {
      int below = codim[s & ~(Subset{1} << i)];
      if (k < below || k > below + 1) {
        throw Error(ErrorKind::kInput, "incidence records are not monotone");
      }
    }
    codim[s] = k;
  }
  for (const auto& [s, rec] : inc.records) {
    if (s == 0 || s >= count || subset_size(s) > r) {
      throw Error(ErrorKind::kInput, "incidence record outside the subsets of size <= r");
    }
  }
  HPolytope p = weighted_hypersimplex(w);
  for (Subset s = 1; s < count; ++s) {
    if (codim[s] < std::min(subset_size(s), r)) p.add_inequality(indicator(s, n), codim[s]);
  }
  return p;
}

}  // namespace whsa
