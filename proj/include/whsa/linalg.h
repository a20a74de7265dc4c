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

#ifndef WHSA_LINALG_H_
#define WHSA_LINALG_H_

#include <optional>
#include <vector>

#include "whsa/rational.h"

namespace whsa {

// Reduced row echelon form.
struct Echelon {
  std::vector<QVector> rows;   // nonzero rows only
  std::vector<int> pivots;     // pivot column per row
};

Echelon rref(std::vector<QVector> rows, int cols);

int rank_of(const std::vector<QVector>& rows, int cols);
int rank_of(const QMatrix& m);

// Basis of {x : rows * x = 0}.
std::vector<QVector> nullspace(const std::vector<QVector>& rows, int cols);

// Unique solution of a square nonsingular system, nullopt if singular.
std::optional<QVector> solve_square(std::vector<QVector> a, QVector b);

Rational determinant(std::vector<QVector> a);

// Basis of the lattice Z^n ∩ {x : rows * x = 0}. Rows are rational; they
// are scaled to integers first. Column-style unimodular reduction.
std::vector<std::vector<Integer>> integer_kernel(const std::vector<QVector>& rows,
                                                 int cols);

// Incrementally maintained row space, for rank-pruned subset searches.
class RowSpace {
 public:
  explicit RowSpace(int cols) : cols_(cols) {}

  // Adds v if it is independent of the current span. Returns true if added.
  bool add(const QVector& v);
  int rank() const { return static_cast<int>(basis_.size()); }
  bool contains(const QVector& v) const;

 private:
  QVector reduce(QVector v) const;

  int cols_;
  std::vector<QVector> basis_;  // each row has a unique pivot, normalized to 1
  std::vector<int> pivots_;
};

}  // namespace whsa

#endif  // WHSA_LINALG_H_
