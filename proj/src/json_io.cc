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

#include "whsa/json_io.h"

#include <algorithm>
#include <fstream>

namespace whsa {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::kInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

Json constraints_to_json(const std::vector<Constraint>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back({{"a", to_json(c.a)}, {"rhs", to_json(c.rhs)}});
  return out;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json subset_to_json(Subset s) {
  Json out = Json::array();
  for (int i : subset_elements(s)) out.push_back(i + 1);
  return out;
}

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return {{"rows", rows}};
}

Json to_json(const Matroid& m) {
  Json bases = Json::array();
  std::vector<Subset> sorted = m.bases();
  std::sort(sorted.begin(), sorted.end(),
            [](Subset a, Subset b) { return subset_elements(a) < subset_elements(b); });
  for (Subset b : sorted) bases.push_back(subset_to_json(b));
  return {{"n", m.n()}, {"r", m.r()}, {"bases", bases}};
}

Json to_json(const Weight& w) { return {{"r", w.r}, {"b", to_json(w.b)}}; }

Json to_json(const Arrangement& a) {
  return {{"r", a.r()}, {"n", a.n()}, {"forms", to_json(a.forms())}};
}

Json to_json(const HPolytope& p) {
  return {{"ambient_dim", p.ambient_dim()},
          {"equalities", constraints_to_json(p.equalities())},
          {"inequalities", constraints_to_json(p.inequalities())}};
}

Json to_json(const WeightedTiling& t) {
  Json tiles = Json::array();
  for (const auto& m : t.tiles) tiles.push_back(to_json(m));
  return {{"weight", to_json(t.weight)}, {"tiles", tiles}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  bad("rationals must be strings \"a/b\" or integers");
}

QVector vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  QVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Subset subset_from_json(const Json& j, int n) {
  if (!j.is_array()) bad("expected an array of 1-based indices");
  Subset s = 0;
  for (const auto& x : j) {
    if (!x.is_number_integer()) bad("indices must be integers");
    int i = x.get<int>();
    if (i < 1 || i > n) bad("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    if (s >> (i - 1) & 1) bad("repeated index " + std::to_string(i));
    s |= Subset{1} << (i - 1);
  }
  return s;
}

QMatrix matrix_from_json(const Json& j) {
  const Json& rows = field(j, "rows");
  if (!rows.is_array() || rows.empty()) bad("\"rows\" must be a non-empty array");
  std::vector<QVector> out;
  for (const auto& row : rows) out.push_back(vector_from_json(row));
  return QMatrix(out);
}

Matroid matroid_from_json(const Json& j) {
  const int n = int_field(j, "n");
  const int r = int_field(j, "r");
  if (n < 1 || n > kMaxGroundSet) throw Error(ErrorKind::kCap, "n must be in [1, 16]");
  const Json& bases = field(j, "bases");
  if (!bases.is_array()) bad("\"bases\" must be an array");
  std::vector<Subset> out;
  for (const auto& b : bases) out.push_back(subset_from_json(b, n));
  return Matroid(n, r, std::move(out));
}

Weight weight_from_json(const Json& j) {
  return Weight(int_field(j, "r"), vector_from_json(field(j, "b")));
}

Arrangement arrangement_from_json(const Json& j) {
  const int r = int_field(j, "r");
  const int n = int_field(j, "n");
  QMatrix forms = matrix_from_json(field(j, "forms"));
  if (forms.rows() != r || forms.cols() != n) bad("forms must be an r x n matrix");
  if (n > kMaxGroundSet) throw Error(ErrorKind::kCap, "n must be at most 16");
  return Arrangement(std::move(forms));
}

QVector point_from_json(const Json& j) { return vector_from_json(field(j, "coords")); }

WeightedTiling tiling_from_json(const Json& j) {
  Weight w = weight_from_json(field(j, "weight"));
  const Json& tiles = field(j, "tiles");
  if (!tiles.is_array() || tiles.empty()) bad("\"tiles\" must be a non-empty array");
  std::vector<Matroid> ms;
  for (const auto& t : tiles) ms.push_back(matroid_from_json(t));
  return {std::move(w), std::move(ms)};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace whsa
