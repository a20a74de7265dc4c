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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "whsa/fixtures.h"
#include "whsa/suites.h"
#include "whsa/tiling.h"

namespace {

using namespace whsa;

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Normalized volume of Δ(2,4) by hand: split the octahedron along the
// diagonal e1+e2 -- e3+e4 into four tetrahedra and sum |det| in the
// lattice coordinates (x1, x2, x3).
long long OctahedronVolumeOracle() {
  using P = std::array<long long, 3>;
  const P a = {1, 1, 0}, z = {0, 0, 1};          // diagonal e1+e2, e3+e4
  const P ring[4] = {{1, 0, 1}, {1, 0, 0}, {0, 1, 0}, {0, 1, 1}};  // e1+e3, e1+e4, e2+e4, e2+e3
  long long total = 0;
  for (int i = 0; i < 4; ++i) {
    const P& p = ring[i];
    const P& q = ring[(i + 1) % 4];
    P u = {z[0] - a[0], z[1] - a[1], z[2] - a[2]};
    P v = {p[0] - a[0], p[1] - a[1], p[2] - a[2]};
    P w = {q[0] - a[0], q[1] - a[1], q[2] - a[2]};
    long long det = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
                    u[2] * (v[0] * w[1] - v[1] * w[0]);
    total += std::llabs(det);
  }
  return total;
}
constexpr long long kOctahedronVolumeGolden = 4;

Outcome Octahedron() {
  WeightedTiling t = *fixtures::tiling("octahedron");
  ValidationReport v = validate_tiling(t);
  HPolytope meet = intersect(*weighted_polytope(t.tiles[0], t.weight), *weighted_polytope(t.tiles[1], t.weight));
  auto hull = affine_hull(meet);
  std::size_t nverts = vertices(meet).vertices.size();
  StrataPoset sp = strata_poset(t);
  int ones = 0, zeros = 0;
  for (int i = 0; i < sp.interior_count; ++i) {
    ones += sp.cells[i].shifted_dim == 1;
    zeros += sp.cells[i].shifted_dim == 0;
  }
  bool pass = v.valid && hull && hull->dim == 2 && nverts == 4 && sp.interior_count == 3 &&
              ones == 2 && zeros == 1;
  return {pass, "valid=" + std::to_string(v.valid) + " meet_dim=" + std::to_string(hull ? hull->dim : -1) +
                    " meet_vertices=" + std::to_string(nverts) + " shifted_dims(1)=" +
                    std::to_string(ones) + " shifted_dims(0)=" + std::to_string(zeros)};
}

int FaceCodim(const WeightedTiling& t, int tile, int element) {
  HPolytope piece = *weighted_polytope(t.tiles[tile], t.weight);
  HPolytope face = piece;
  QVector e(t.weight.n(), Rational(0));
  e[element] = 1;
  face.add_equality(e, t.weight.b[element]);
  auto hp = affine_hull(piece);
  auto hf = affine_hull(face);
  return hf ? hp->dim - hf->dim : -1;
}

Outcome P3n5() {
  WeightedTiling unit = *fixtures::tiling("p3n5");
  WeightedTiling light = unit;
  light.weight = fixtures::example_w();
  bool valid = validate_tiling(unit).valid && validate_tiling(light).valid;
  HPolytope face = *weighted_polytope(unit.tiles[0], unit.weight);
  face.add_equality({0, 0, 0, 0, 1}, 1);
  int face_dim = affine_hull(face)->dim;
  int codim_unit = FaceCodim(unit, 0, 4);
  int codim_light = FaceCodim(light, 0, 4);
  bool pass = valid && face_dim == 2 && codim_unit == 2 && codim_light == 1;
  return {pass, "valid=" + std::to_string(valid) + " dim(x5=1 face)=" + std::to_string(face_dim) +
                    " codim(b5=1)=" + std::to_string(codim_unit) +
                    " codim(b5=9/10)=" + std::to_string(codim_light)};
}

std::string StatsLine(const SuiteResult& r) {
  return "trials=" + std::to_string(r.trials) + " mismatches=" + std::to_string(r.mismatches) +
         " stats=" + r.stats.dump();
}

Outcome GitLc() {
  SuiteResult r = run_git_lc_equiv(kDefaultSeed, 200);
  return {r.passed() && r.trials >= 200, StatsLine(r)};
}

Outcome ChamberCoincide() {
  SuiteResult r = run_chamber_coincide(kDefaultSeed, 300, chamber_suite_sizes());
  std::string detail = StatsLine(r) + " interior_rule_disagrees=" +
                       std::to_string(r.stats.value("interior_rule_disagrees", 0));
  if (!r.counterexamples.empty()) detail += " first=" + r.counterexamples[0].dump();
  return {r.passed() && r.trials >= 100, detail};
}

Outcome DegreeGen() {
  SuiteResult r = run_degree_gen(chamber_suite_sizes(), {2, 3});
  return {r.passed() && r.trials > 0, StatsLine(r)};
}

Outcome Roundtrip() {
  SuiteResult r = run_reconstruct_roundtrip(kDefaultSeed, 100);
  return {r.passed() && r.trials >= 100, StatsLine(r)};
}

Outcome ExampleRelations() {
  Weight w = fixtures::example_w();
  Weight wp = fixtures::example_w_prime();
  Weight wpp = fixtures::example_w_double_prime();
  bool gt1 = weight_partial_order(wp, w) == WeightOrder::kGreater;
  bool gt2 = weight_partial_order(w, wpp) == WeightOrder::kGreater;
  bool c1 = in_chamber_closure(wp, w);
  bool c2 = in_chamber_closure(wpp, w);
  std::string detail = std::string("w'>w=") + (gt1 ? "1" : "0") + " w>w''=" + (gt2 ? "1" : "0") +
                       " closure(w',w)=" + (c1 ? "1" : "0") + " closure(w'',w)=" + (c2 ? "1" : "0");
  if (!c2) {
    ChamberSignature s(w), t(wpp);
    detail += " [w: b1+b2-2 sign " + std::to_string(s.wall_sign(3, 2)) + ", face b1 sign " +
              std::to_string(s.face_sign(0)) + "; w'': " + std::to_string(t.wall_sign(3, 2)) + ", " +
              std::to_string(t.face_sign(0)) + "]";
  }
  return {gt1 && gt2 && c1 && c2, detail};
}

Outcome VolumeLedger() {
  WeightedTiling t = *fixtures::tiling("octahedron");
  Rational whole = normalized_volume(hypersimplex(2, 4));
  Rational pieces = 0;
  for (const auto& m : t.tiles) pieces += normalized_volume(*weighted_polytope(m, t.weight));
  long long oracle = OctahedronVolumeOracle();
  bool pass = whole == pieces && whole == oracle && oracle == kOctahedronVolumeGolden;
  return {pass, "vol(D(2,4))=" + to_string(whole) + " pieces=" + to_string(pieces) + " oracle=" + std::to_string(oracle)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"1 octahedron tiling and strata", 5, Octahedron},
      {"2 p3n5 tiling and divisor codimension", 10, P3n5},
      {"3 git/lc equivalence suite", 300, GitLc},
      {"4 chamber coincidence", 600, ChamberCoincide},
      {"5 degree-one generation", 600, DegreeGen},
      {"6 reconstruction roundtrip", 600, Roundtrip},
      {"7 example weight relations", 5, ExampleRelations},
      {"8 volume ledger", 5, VolumeLedger},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.pass && secs < c.limit_seconds;
    failures += !pass;
    std::printf("%s [%s] (%.2fs) %s\n", pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
  }
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
