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

// Weighted matroid tilings of Δ_w: validation, parent covers, strata and
// reconstruction of polytopes from divisor incidence.

#ifndef WHSA_TILING_H_
#define WHSA_TILING_H_

#include <map>
#include <optional>
#include <vector>

#include "whsa/arrangement.h"
#include "whsa/matroid.h"
#include "whsa/polytope.h"
#include "whsa/weights.h"

namespace whsa {

// P_m ∩ Δ_w, provided relint(P_m) meets Δ_w.
std::optional<HPolytope> weighted_polytope(const Matroid& m, const Weight& w);

struct WeightedTiling {
  Weight weight;
  std::vector<Matroid> tiles;
};

struct PairCheck {
  int i = 0;
  int j = 0;
  int intersection_dim = -1;  // -1 when empty
  bool face_fitting = false;
  bool interiors_disjoint = false;
};

struct ValidationReport {
  std::vector<bool> tile_accepted;
  std::vector<PairCheck> pairs;
  std::vector<Rational> piece_volumes;
  Rational volume_sum;
  Rational window_volume;
  bool face_fitting = false;
  bool volumes_match = false;
  bool interiors_disjoint = false;
  bool valid = false;
};

// Throws Error(kInput) when a tile has the wrong (r, n).
ValidationReport validate_tiling(const WeightedTiling& t);

struct ParentCover {
  std::vector<HPolytope> parents;
  std::vector<std::pair<int, int>> overlaps;  // full-dimensional intersections
  Rational volume_sum;
  Rational hypersimplex_volume;
  bool covers = false;  // the parents tile Δ(r, n)
};

ParentCover parent_cover(const WeightedTiling& t);

struct StrataCell {
  HPolytope polytope{1};
  std::vector<QVector> vertices;
  int dim = 0;
  int shifted_dim = 0;
  std::vector<int> tiles;
  bool divisor = false;       // relint lies in the boundary of Δ_w
  Subset on_faces = 0;        // i with x_i = b_i on the whole cell
};

struct DivisorFace {
  int tile = 0;
  int element = 0;               // 0-based
  std::optional<int> dim;        // of piece ∩ {x_i = b_i}
  std::optional<int> codim;      // inside the piece
};

struct StrataPoset {
  // Interior cells (relint meets Int Δ_w) first, then divisor cells; each
  // group by decreasing dimension and then by vertex list.
  std::vector<StrataCell> cells;
  std::vector<std::pair<int, int>> relation;  // (a, b): cell a ⊊ cell b
  std::vector<DivisorFace> divisor_faces;
  int interior_count = 0;
};

StrataPoset strata_poset(const WeightedTiling& t);

// Codimension of ∩_{i in I} B_i for nonempty I with |I| <= r, or nullopt
// when the intersection is empty in P^{r-1}.
struct DivisorIncidence {
  int r = 0;
  int n = 0;
  std::map<Subset, std::optional<int>> records;
};

DivisorIncidence incidence_of(const Arrangement& arr);
// The same records computed from ranks alone.
DivisorIncidence incidence_of(const Matroid& m);

// Δ_w cut by sum_{i in I} x_i <= codim(I) for every recorded or derived I.
// Throws Error(kInput) when the records are not monotone or incomplete.
HPolytope reconstruct_polytope(const DivisorIncidence& inc, const Weight& w);

}  // namespace whsa

#endif  // WHSA_TILING_H_
