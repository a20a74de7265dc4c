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

#ifndef WHSA_MATROID_H_
#define WHSA_MATROID_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "whsa/polytope.h"
#include "whsa/rational.h"

namespace whsa {

// Subsets of the ground set as bitmasks; bit i is element i+1.
using Subset = std::uint32_t;

inline constexpr int kMaxGroundSet = 16;

inline int subset_size(Subset s) { return __builtin_popcount(s); }
std::vector<int> subset_elements(Subset s);  // 0-based, ascending
Subset subset_of(const std::vector<int>& zero_based);

// A matroid given by its bases. Equality is equality of basis families.
class Matroid {
 public:
  // Validates sizes and the exchange axiom; throws Error(kInput) otherwise.
  Matroid(int n, int r, std::vector<Subset> bases,
          std::optional<QMatrix> realization = std::nullopt);

  int n() const { return n_; }
  int r() const { return r_; }
  const std::vector<Subset>& bases() const { return bases_; }
  const std::optional<QMatrix>& realization() const { return realization_; }

  bool is_basis(Subset s) const;
  int rank(Subset s) const { return rank_[s]; }
  Subset closure(Subset s) const;
  bool is_flat(Subset s) const { return closure(s) == s; }
  std::vector<Subset> flats() const;
  Subset loops() const;

  bool operator==(const Matroid& other) const {
    return n_ == other.n_ && r_ == other.r_ && bases_ == other.bases_;
  }

 private:
  int n_;
  int r_;
  std::vector<Subset> bases_;  // ascending
  std::optional<QMatrix> realization_;
  std::vector<std::int8_t> rank_;  // indexed by subset
};

struct MatroidPolytope {
  Matroid matroid;
  HPolytope hrep;
  VRep vrep;
};

// Column matroid of an r x n matrix of full row rank.
Matroid matroid_from_matrix(const QMatrix& a);

// Basis-exchange axiom over all ordered pairs.
bool check_bases(int n, int r, const std::vector<Subset>& bases);

int rank(const Matroid& m, Subset s);

// H-rep: 0 <= x <= 1, sum x = r, sum_{F} x <= rank(F) for proper flats F
// with rank(F) < |F|. V-rep: basis indicator vectors.
MatroidPolytope matroid_polytope(const Matroid& m);
HPolytope matroid_hrep(const Matroid& m);

// Finest partition with additive rank; loops and coloops are singletons.
std::vector<Subset> connected_components(const Matroid& m);

// All matroids of rank r on [n], ordered by their sorted basis lists.
// Requires C(n, r) <= 20.
std::vector<Matroid> enumerate_matroids(int r, int n, bool loopless);

// Every lattice point of d * P_M is a sum of d basis indicators.
bool degree_d_generation(const Matroid& m, int d);

QVector indicator(Subset s, int n);

}  // namespace whsa

#endif  // WHSA_MATROID_H_
