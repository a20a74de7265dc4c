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

#include "whsa/linalg.h"

#include <algorithm>
#include <utility>

namespace whsa {

Echelon rref(std::vector<QVector> rows, int cols) {
  Echelon out;
  int r = 0;
  const int m = static_cast<int>(rows.size());
  for (int c = 0; c < cols && r < m; ++c) {
    int piv = -1;
    for (int i = r; i < m; ++i) {
      if (!rows[i][c].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    Rational inv = 1 / rows[r][c];
    for (int j = c; j < cols; ++j) {
      if (!rows[r][j].is_zero()) rows[r][j] *= inv;
    }
    for (int i = 0; i < m; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rational f = rows[i][c];
      for (int j = c; j < cols; ++j) {
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

int rank_of(const std::vector<QVector>& rows, int cols) {
  RowSpace space(cols);
  for (const auto& v : rows) space.add(v);
  return space.rank();
}

int rank_of(const QMatrix& m) {
  std::vector<QVector> rows;
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rank_of(rows, m.cols());
}

std::vector<QVector> nullspace(const std::vector<QVector>& rows, int cols) {
  Echelon e = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVector v(cols, Rational(0));
    v[f] = 1;
    for (size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve_square(std::vector<QVector> a, QVector b) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
  Echelon e = rref(std::move(a), n + 1);
  if (static_cast<int>(e.pivots.size()) != n || e.pivots.back() != n - 1) {
    return std::nullopt;
  }
  QVector x(n);
  for (int i = 0; i < n; ++i) x[i] = e.rows[i][n];
  return x;
}

Rational determinant(std::vector<QVector> a) {
  const int n = static_cast<int>(a.size());
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i) {
      if (!a[i][c].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      Rational f = a[i][c] / a[c][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

std::vector<std::vector<Integer>> integer_kernel(const std::vector<QVector>& rows,
                                                 int cols) {
  // Scale each row to a primitive integer vector.
  std::vector<std::vector<Integer>> m;
  for (const auto& row : rows) {
    Integer l = 1;
    for (const auto& q : row) l = boost::multiprecision::lcm(l, Integer(denominator(q)));
    std::vector<Integer> ir(cols);
    for (int j = 0; j < cols; ++j) ir[j] = numerator(row[j] * l);
    m.push_back(std::move(ir));
  }
  // M * U = [H | 0] with U unimodular; trailing columns of U span the kernel.
  std::vector<std::vector<Integer>> u(cols, std::vector<Integer>(cols, 0));
  for (int j = 0; j < cols; ++j) u[j][j] = 1;
  auto col_axpy = [&](int dst, int src, const Integer& q) {  // col dst -= q col src
    for (auto& r : m) r[dst] -= q * r[src];
    for (auto& r : u) r[dst] -= q * r[src];
  };
  auto col_swap = [&](int a, int b) {
    for (auto& r : m) std::swap(r[a], r[b]);
    for (auto& r : u) std::swap(r[a], r[b]);
  };
  int p = 0;
  for (size_t i = 0; i < m.size() && p < cols; ++i) {
    while (true) {
      int best = -1;
      for (int c = p; c < cols; ++c) {
        if (m[i][c] != 0 && (best < 0 || abs(m[i][c]) < abs(m[i][best]))) best = c;
      }
      if (best < 0) break;
      bool others = false;
      for (int c = p; c < cols; ++c) {
        if (c == best || m[i][c] == 0) continue;
        others = true;
        col_axpy(c, best, m[i][c] / m[i][best]);
      }
      if (!others) {
        col_swap(p, best);
        ++p;
        break;
      }
    }
  }
  std::vector<std::vector<Integer>> basis;
  for (int c = p; c < cols; ++c) {
    std::vector<Integer> v(cols);
    for (int j = 0; j < cols; ++j) v[j] = u[j][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

QVector RowSpace::reduce(QVector v) const {
  for (size_t i = 0; i < basis_.size(); ++i) {
    const int p = pivots_[i];
    if (v[p].is_zero()) continue;
    Rational f = v[p];
    for (int j = 0; j < cols_; ++j) {
      if (!basis_[i][j].is_zero()) v[j] -= f * basis_[i][j];
    }
  }
  return v;
}

bool RowSpace::add(const QVector& v) {
  QVector w = reduce(v);
  int p = -1;
  for (int j = 0; j < cols_; ++j) {
    if (!w[j].is_zero()) {
      p = j;
      break;
    }
  }
  if (p < 0) return false;
  Rational inv = 1 / w[p];
  for (auto& x : w) {
    if (!x.is_zero()) x *= inv;
  }
  // Keep existing rows reduced at the new pivot so reduce() stays one pass.
  for (auto& b : basis_) {
    if (b[p].is_zero()) continue;
    Rational f = b[p];
    for (int j = 0; j < cols_; ++j) {
      if (!w[j].is_zero()) b[j] -= f * w[j];
    }
  }
  basis_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(const QVector& v) const {
  QVector w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); });
}

}  // namespace whsa
