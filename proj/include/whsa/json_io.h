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

// JSON formats. Rationals are strings "a/b" or "a"; element indices are
// 1-based. Malformed input raises Error(kInput).

#ifndef WHSA_JSON_IO_H_
#define WHSA_JSON_IO_H_

#include <string>

#include "json.hpp"
#include "whsa/arrangement.h"
#include "whsa/matroid.h"
#include "whsa/tiling.h"
#include "whsa/weights.h"

namespace whsa {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const QVector& v);
Json subset_to_json(Subset s);
Json to_json(const QMatrix& m);           // {"rows": [[...], ...]}
Json to_json(const Matroid& m);           // {"n", "r", "bases"}
Json to_json(const Weight& w);            // {"r", "b"}
Json to_json(const Arrangement& a);       // {"r", "n", "forms"}
Json to_json(const HPolytope& p);         // {"ambient_dim", "equalities", "inequalities"}
Json to_json(const WeightedTiling& t);    // {"weight", "tiles"}

Rational rational_from_json(const Json& j);
QVector vector_from_json(const Json& j);
Subset subset_from_json(const Json& j, int n);
QMatrix matrix_from_json(const Json& j);
Matroid matroid_from_json(const Json& j);
Weight weight_from_json(const Json& j);
Arrangement arrangement_from_json(const Json& j);
QVector point_from_json(const Json& j);   // {"coords": [...]}
WeightedTiling tiling_from_json(const Json& j);

// Reads and parses a file; Error(kInput) on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace whsa

#endif  // WHSA_JSON_IO_H_
