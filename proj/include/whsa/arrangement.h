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

// Realizable weighted hyperplane arrangements in P^{r-1}: lc/klt tests and
// torus GIT stability through moment polytopes.

#ifndef WHSA_ARRANGEMENT_H_
#define WHSA_ARRANGEMENT_H_

#include <optional>

#include "whsa/matroid.h"
#include "whsa/polytope.h"
#include "whsa/weights.h"

namespace whsa {

// Column i of `forms` is the linear form z_i cutting out B_i.
class Arrangement {
 public:
  // Throws Error(kInput) on a zero column or rank deficiency.
  explicit Arrangement(QMatrix forms);

  int r() const { return forms_.rows(); }
  int n() const { return forms_.cols(); }
  const QMatrix& forms() const { return forms_; }
  const Matroid& matroid() const { return matroid_; }

 private:
  QMatrix forms_;
  Matroid matroid_;
};

Arrangement arrangement_from_matrix(const QMatrix& forms);

// {i : z_i(p) = 0} for p in V-coordinates. Throws on p = 0.
Subset vanishing_set(const Arrangement& arr, const QVector& p);

struct LcResult {
  bool holds = true;
  std::optional<Subset> violator;  // smallest failing subset when !holds
};

// sum_{i in I} b_i <= rank(I) for every nonempty I with rank(I) < r, i.e.
// every nonempty intersection of the B_i (strictly for klt).
LcResult is_lc(const Arrangement& arr, const Weight& w);
LcResult is_klt(const Arrangement& arr, const Weight& w);
// The same, restricted to I ⊆ I(p).
LcResult is_lc_at(const Arrangement& arr, const Weight& w, const QVector& p);
LcResult is_klt_at(const Arrangement& arr, const Weight& w, const QVector& p);

// Δ_w with x_i = b_i for i in I.
HPolytope weighted_face(const Weight& w, Subset s);

struct GitVerdict {
  bool semistable = false;
  bool stable = false;
  Subset vanishing_set = 0;
  HPolytope face{1};  // Δ_w^p
  std::optional<QVector> semistable_witness;  // in P_V ∩ Δ_w^p
  std::optional<QVector> stable_witness;      // in relint P_V ∩ relint Δ_w^p
  int direction_sum_dim = -1;                 // dim(dir P_V + dir Δ_w^p)
};

GitVerdict git_verdict(const Arrangement& arr, const Weight& w, const QVector& p);
bool is_semistable(const Arrangement& arr, const Weight& w, const QVector& p);
bool is_stable(const Arrangement& arr, const Weight& w, const QVector& p);

// P_V + (|w| - r) σ_p, kept in lifted form over (x, y, s).
class MomentPolytope {
 public:
  MomentPolytope(const Arrangement& arr, const Weight& w, const QVector& p);

  const HPolytope& lifted() const { return lifted_; }
  // LP membership of x.
  bool contains(const QVector& x) const;

 private:
  int n_;
  HPolytope lifted_;
};

// Compares x ∈ P_V with the lc inequalities of the pair with coefficients
// x, where zero coefficients drop the divisor. Requires 0 <= x_i <= 1.
bool lc_locus_equals_polytope(const Arrangement& arr, const QVector& x);

// Raw inequality check over all subsets (or those inside `within`).
LcResult lc_inequalities(const Matroid& m, const QVector& b, bool strict,
                         Subset within);

}  // namespace whsa

#endif  // WHSA_ARRANGEMENT_H_
