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

// Exact polyhedral computations on H-represented polytopes: LP, affine
// hulls, relative interiors, vertices, lattice points, normalized volume
// and faces. Everything is exact rational; all functions are pure.

#ifndef WHSA_POLYTOPE_H_
#define WHSA_POLYTOPE_H_

#include <optional>
#include <span>
#include <vector>

#include "whsa/rational.h"

namespace whsa {

// Largest ambient dimension accepted by the enumeration routines.
inline constexpr int kMaxAmbientDim = 16;

// a·x = rhs or a·x <= rhs, depending on where it is stored.
struct Constraint {
  QVector a;
  Rational rhs;

  bool operator==(const Constraint&) const = default;
};

class HPolytope {
 public:
  explicit HPolytope(int ambient_dim);

  int ambient_dim() const { return dim_; }
  const std::vector<Constraint>& equalities() const { return eqs_; }
  const std::vector<Constraint>& inequalities() const { return ineqs_; }

  HPolytope& add_equality(QVector a, Rational rhs);
  HPolytope& add_inequality(QVector a, Rational rhs);
  // lo <= x_i <= hi.
  HPolytope& add_bounds(int i, const Rational& lo, const Rational& hi);

  bool contains(const QVector& x) const;

 private:
  int dim_;
  std::vector<Constraint> eqs_;
  std::vector<Constraint> ineqs_;
};

struct VRep {
  std::vector<QVector> vertices;  // lexicographically sorted, distinct
};

enum class Sense { kMaximize, kMinimize };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational optimum;
  QVector witness;

  bool optimal() const { return status == LpStatus::kOptimal; }
};

// Two-phase dense simplex with Bland's rule.
LpResult lp_solve(const HPolytope& poly, const QVector& objective, Sense sense);

// Any feasible point, or nullopt.
std::optional<QVector> feasible_point(const HPolytope& poly);

struct AffineHull {
  int dim = 0;
  // Independent subset of the constraints that hold with equality on the
  // whole polytope (stated equalities first, then implicit inequalities).
  std::vector<Constraint> equalities;
  // Indices into poly.inequalities() that are tight everywhere.
  std::vector<int> implicit_inequalities;
};

// nullopt when the polytope is empty.
std::optional<AffineHull> affine_hull(const HPolytope& poly);

std::optional<QVector> relint_point(const HPolytope& poly);

// A point lying in relint(p) for every p in `strict` and in every q in
// `weak`. Empty spans are allowed.
std::optional<QVector> common_point(std::span<const HPolytope> strict,
                                    std::span<const HPolytope> weak);

HPolytope intersect(const HPolytope& p, const HPolytope& q);

// Throws Error(kUnbounded) on unbounded input and Error(kCap) above
// kMaxAmbientDim.
VRep vertices(const HPolytope& poly);

std::vector<QVector> lattice_points(const HPolytope& poly);

// Volume inside the affine hull, normalized so a unimodular simplex of the
// lattice Z^n ∩ (direction space of the hull) has volume 1.
Rational normalized_volume(const HPolytope& poly);

// Same normalized volume, measured in a prescribed dimension: zero when the
// polytope is lower dimensional.
Rational normalized_volume_in_dim(const HPolytope& poly, int dim);

bool contained_in(const HPolytope& p, const HPolytope& q);
bool polytopes_equal(const HPolytope& p, const HPolytope& q);

// Face of `poly` carrying x in its relative interior: every inequality tight
// at x becomes an equality. Throws Error(kInput) if x is not in poly.
HPolytope minimal_face(const HPolytope& poly, const QVector& x);

// Dimension of the span of {v - v0}.
int affine_dim(std::span<const QVector> points);

// Dimension of dir(p) + dir(q); both non-empty.
int direction_sum_dim(const HPolytope& p, const HPolytope& q);

// Scales a polytope by a positive factor.
HPolytope dilate(const HPolytope& poly, const Rational& factor);

bool lex_less(const QVector& a, const QVector& b);

}  // namespace whsa

#endif  // WHSA_POLYTOPE_H_
