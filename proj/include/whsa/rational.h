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

#ifndef WHSA_RATIONAL_H_
#define WHSA_RATIONAL_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace whsa {

// GMP-backed rationals are kept in lowest terms with a positive
// denominator by construction.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using QVector = std::vector<Rational>;

// Error categories map onto CLI exit codes.
enum class ErrorKind { kInput, kDimension, kCap, kUnbounded };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Dense row-major rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit QMatrix(const std::vector<QVector>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[i * cols_ + j]; }

  QVector row(int i) const;
  QVector col(int j) const;

  bool operator==(const QMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// "a/b", "a", or "-a/b". Throws Error(kInput) on malformed text or a zero
// denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Rational dot(const QVector& a, const QVector& b);
bool is_integer(const Rational& q);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
Rational sum(const QVector& v);

int sign(const Rational& q);

}  // namespace whsa

#endif  // WHSA_RATIONAL_H_
