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

#include "whsa/rational.h"

#include <cctype>

namespace whsa {

QMatrix::QMatrix(const std::vector<QVector>& rows)
    : rows_(static_cast<int>(rows.size())),
      cols_(rows.empty() ? 0 : static_cast<int>(rows.front().size())) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) {
      throw Error(ErrorKind::kInput, "matrix rows have different lengths");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QVector QMatrix::row(int i) const {
  return QVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

QVector QMatrix::col(int j) const {
  QVector c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-' ||
      den[0] == '+') {
    throw Error(ErrorKind::kInput, "malformed rational '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) {
    throw Error(ErrorKind::kInput, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_integer(num), d);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

Integer floor_of(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

Integer ceil_of(const Rational& q) { return -floor_of(-q); }

Rational sum(const QVector& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

int sign(const Rational& q) { return q.sign(); }

}  // namespace whsa
