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

// Exact two-phase simplex. Free variables are split as x = u - v, so the
// solver works on the standard form  A y = b, y >= 0, b >= 0.

#include <utility>
#include <vector>

#include "whsa/polytope.h"

namespace whsa {
namespace {

class Tableau {
 public:
  Tableau(std::vector<QVector> rows, QVector rhs, std::vector<int> basis, int cols)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)),
        cols_(cols) {}

  // Sets the objective (minimize cost·y) and prices out the current basis.
  void set_cost(const QVector& cost) {
    cost_ = cost;
    reduced_ = cost;
    value_ = 0;
    for (size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost_[basis_[i]];
      if (cb.is_zero()) continue;
      value_ += cb * rhs_[i];
      for (int j = 0; j < cols_; ++j) {
        if (!rows_[i][j].is_zero()) reduced_[j] -= cb * rows_[i][j];
      }
    }
  }

  // Runs Bland's rule over columns [0, limit). Returns false if unbounded.
  bool minimize(int limit) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < limit; ++j) {
        if (reduced_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int r, int c) {
    QVector& pr = rows_[r];
    Rational inv = 1 / pr[c];
    std::vector<int> nz;
    for (int j = 0; j < cols_; ++j) {
      if (pr[j].is_zero()) continue;
      pr[j] *= inv;
      nz.push_back(j);
    }
    rhs_[r] *= inv;
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(i) == r || rows_[i][c].is_zero()) continue;
      Rational f = rows_[i][c];
      for (int j : nz) rows_[i][j] -= f * pr[j];
      if (!rhs_[r].is_zero()) rhs_[i] -= f * rhs_[r];
    }
    if (!reduced_.empty() && !reduced_[c].is_zero()) {
      Rational f = reduced_[c];
      for (int j : nz) reduced_[j] -= f * pr[j];
      value_ += f * rhs_[r];
    }
    basis_[r] = c;
  }

  // Moves basic variables with index >= first_art out of the basis, or
  // drops their (redundant) rows.
  void expel(int first_art) {
    for (size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_art) {
        ++i;
        continue;
      }
      int c = -1;
      for (int j = 0; j < first_art; ++j) {
        if (!rows_[i][j].is_zero()) {
          c = j;
          break;
        }
      }
      if (c >= 0) {
        pivot(static_cast<int>(i), c);
        ++i;
      } else {
        rows_.erase(rows_.begin() + i);
        rhs_.erase(rhs_.begin() + i);
        basis_.erase(basis_.begin() + i);
      }
    }
  }

  QVector solution() const {
    QVector y(cols_, Rational(0));
    for (size_t i = 0; i < rows_.size(); ++i) y[basis_[i]] = rhs_[i];
    return y;
  }

  const Rational& value() const { return value_; }

 private:
  std::vector<QVector> rows_;
  QVector rhs_;
  std::vector<int> basis_;
  int cols_;
  QVector cost_;
  QVector reduced_;
  Rational value_;
};

}  // namespace

LpResult lp_solve(const HPolytope& poly, const QVector& objective, Sense sense) {
  const int n = poly.ambient_dim();
  if (static_cast<int>(objective.size()) != n) {
    throw Error(ErrorKind::kDimension, "objective length does not match ambient dimension");
  }
  const auto& ineqs = poly.inequalities();
  const auto& eqs = poly.equalities();
  const int mi = static_cast<int>(ineqs.size());
  const int me = static_cast<int>(eqs.size());
  const int m = mi + me;

  // Column layout: u (n) | v (n) | slacks (mi) | artificials.
  const int slack0 = 2 * n;
  const int art0 = slack0 + mi;
  std::vector<bool> needs_art(m, false);
  int arts = 0;
  for (int k = 0; k < mi; ++k) {
    if (ineqs[k].rhs < 0) {
      needs_art[k] = true;
      ++arts;
    }
  }
  for (int k = 0; k < me; ++k) {
    needs_art[mi + k] = true;
    ++arts;
  }
  const int cols = art0 + arts;

  std::vector<QVector> rows(m, QVector(cols, Rational(0)));
  QVector rhs(m);
  std::vector<int> basis(m);
  int next_art = art0;
  for (int k = 0; k < m; ++k) {
    const Constraint& con = k < mi ? ineqs[k] : eqs[k - mi];
    const bool neg = con.rhs < 0;
    for (int j = 0; j < n; ++j) {
      if (con.a[j].is_zero()) continue;
      rows[k][j] = neg ? -con.a[j] : con.a[j];
      rows[k][n + j] = -rows[k][j];
    }
    if (k < mi) rows[k][slack0 + k] = neg ? -1 : 1;
    rhs[k] = neg ? -con.rhs : con.rhs;
    if (needs_art[k]) {
      rows[k][next_art] = 1;
      basis[k] = next_art++;
    } else {
      basis[k] = slack0 + k;
    }
  }

  Tableau tab(std::move(rows), std::move(rhs), std::move(basis), cols);
  LpResult result;
  if (arts > 0) {
    QVector cost(cols, Rational(0));
    for (int j = art0; j < cols; ++j) cost[j] = 1;
    tab.set_cost(cost);
    tab.minimize(cols);
    if (tab.value() > 0) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    tab.expel(art0);
  }

  QVector cost(cols, Rational(0));
  bool trivial = true;
  for (int j = 0; j < n; ++j) {
    if (objective[j].is_zero()) continue;
    trivial = false;
    Rational c = sense == Sense::kMaximize ? -objective[j] : objective[j];
    cost[j] = c;
    cost[n + j] = -c;
  }
  if (!trivial) {
    tab.set_cost(cost);
    if (!tab.minimize(art0)) {
      result.status = LpStatus::kUnbounded;
      return result;
    }
  }
  QVector y = tab.solution();
  result.status = LpStatus::kOptimal;
  result.witness.resize(n);
  for (int j = 0; j < n; ++j) result.witness[j] = y[j] - y[n + j];
  result.optimum = dot(objective, result.witness);
  return result;
}

std::optional<QVector> feasible_point(const HPolytope& poly) {
  LpResult r = lp_solve(poly, QVector(poly.ambient_dim(), Rational(0)), Sense::kMaximize);
  if (!r.optimal()) return std::nullopt;
  return r.witness;
}

}  // namespace whsa
