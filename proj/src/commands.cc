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

#include "whsa/commands.h"

#include <array>
#include <chrono>
#include <cstdio>

#include "whsa/fixtures.h"
#include "whsa/suites.h"

namespace whsa {
namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json lc_json(const LcResult& r) {
  Json j = {{"holds", r.holds}};
  j["violator"] = r.violator ? subset_to_json(*r.violator) : Json(nullptr);
  return j;
}

Json optional_vector(const std::optional<QVector>& v) { return v ? to_json(*v) : Json(nullptr); }

Json vertices_json(const std::vector<QVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

}  // namespace

std::string digest(const std::vector<Json>& inputs) {
  std::uint64_t h = 14695981039346656037ull;
  for (const auto& j : inputs) {
    for (unsigned char c : j.dump()) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const RunReport& r, bool with_timing) {
  Json j = {{"command", r.command}, {"inputs_digest", r.inputs_digest}};
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  j["verdict"] = r.verdict;
  j["verdicts"] = r.verdicts;
  j["counterexamples"] = r.counterexamples;
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

RunReport cmd_lc(const Arrangement& arr, const Weight& w, const std::optional<QVector>& at) {
  Stopwatch sw;
  RunReport rep;
  rep.command = "lc";
  std::vector<Json> inputs = {to_json(arr), to_json(w)};
  if (at) inputs.push_back(to_json(*at));
  rep.inputs_digest = digest(inputs);
  LcResult lc = is_lc(arr, w);
  LcResult klt = is_klt(arr, w);
  rep.verdicts["lc"] = lc_json(lc);
  rep.verdicts["klt"] = lc_json(klt);
  rep.verdict = lc.holds;
  if (at) {
    LcResult lc_at = is_lc_at(arr, w, *at);
    rep.verdicts["vanishing_set"] = subset_to_json(vanishing_set(arr, *at));
    rep.verdicts["lc_at"] = lc_json(lc_at);
    rep.verdicts["klt_at"] = lc_json(is_klt_at(arr, w, *at));
    rep.verdict = lc_at.holds;
  }
  rep.seconds = sw.seconds();
  return rep;
}

RunReport cmd_git(const Arrangement& arr, const Weight& w, const QVector& p) {
  Stopwatch sw;
  RunReport rep;
  rep.command = "git";
  rep.inputs_digest = digest({to_json(arr), to_json(w), to_json(p)});
  if (!in_weight_domain(w)) throw Error(ErrorKind::kInput, "weight outside the weight domain");
  GitVerdict v = git_verdict(arr, w, p);
  bool lc_at = is_lc_at(arr, w, p).holds;
  bool klt_at = is_klt_at(arr, w, p).holds;
  HPolytope pv = matroid_hrep(arr.matroid());
  HPolytope window = weighted_hypersimplex(w);
  bool meets = feasible_point(intersect(pv, window)).has_value();
  std::array<HPolytope, 1> strict = {window};
  std::array<HPolytope, 1> weak = {pv};
  bool meets_interior = common_point(strict, weak).has_value();

  Json& out = rep.verdicts;
  out["semistable"] = v.semistable;
  out["stable"] = v.stable;
  out["stable_implies_semistable"] = !v.stable || v.semistable;
  out["vanishing_set"] = subset_to_json(v.vanishing_set);
  out["face"] = to_json(v.face);
  out["certificates"] = {{"semistable_witness", optional_vector(v.semistable_witness)},
                         {"stable_witness", optional_vector(v.stable_witness)},
                         {"direction_sum_dim", v.direction_sum_dim}};
  out["lc_at"] = lc_at;
  out["klt_at"] = klt_at;
  out["polytope_meets_window"] = meets;
  out["polytope_meets_window_interior"] = meets_interior;
  // The equivalences are only asserted under their hypotheses.
  out["semistable_equals_lc_at"] = meets ? Json(v.semistable == lc_at) : Json(nullptr);
  out["stable_equals_klt_at"] = meets_interior ? Json(v.stable == klt_at) : Json(nullptr);
  out["w_in_moment_polytope"] = MomentPolytope(arr, w, p).contains(w.b);
  rep.verdict = v.semistable;
  rep.seconds = sw.seconds();
  return rep;
}

RunReport cmd_chamber(const std::vector<Weight>& weights, bool matroid_crosscheck) {
  Stopwatch sw;
  if (weights.size() < 2) throw Error(ErrorKind::kInput, "chamber needs at least two weights");
  RunReport rep;
  rep.command = "chamber";
  std::vector<Json> inputs;
  for (const auto& w : weights) inputs.push_back(to_json(w));
  inputs.push_back(matroid_crosscheck);
  rep.inputs_digest = digest(inputs);
  const int r = weights[0].r;
  const int n = weights[0].n();
  for (const auto& w : weights) {
    if (w.r != r || w.n() != n) throw Error(ErrorKind::kInput, "weights of different (r, n)");
    if (!in_weight_domain(w)) throw Error(ErrorKind::kInput, "weight outside the weight domain");
  }
  std::vector<Matroid> matroids;
  if (matroid_crosscheck) matroids = enumerate_matroids(r, n, true);  // caps C(n, r) at 20

  Json pairs = Json::array();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t j = i + 1; j < weights.size(); ++j) {
      const Weight& a = weights[i];
      const Weight& b = weights[j];
      Json pj = {{"i", i + 1},
                 {"j", j + 1},
                 {"order", to_string(weight_partial_order(a, b))},
                 {"same_chamber", same_chamber(a, b)},
                 {"i_in_closure_of_j", in_chamber_closure(a, b)},
                 {"j_in_closure_of_i", in_chamber_closure(b, a)}};
      if (matroid_crosscheck) {
        bool z = zchamber_equivalent(a, b, matroids);
        pj["zchamber_equivalent"] = z;
        pj["crosscheck_agrees"] = z == same_chamber(a, b);
        if (z != same_chamber(a, b)) {
          rep.counterexamples.push_back({{"w", to_json(a)}, {"w_prime", to_json(b)}});
        }
      }
      pairs.push_back(std::move(pj));
    }
  }
  rep.verdicts["pairs"] = std::move(pairs);
  if (matroid_crosscheck) rep.verdicts["loopless_matroids"] = matroids.size();
  rep.verdict = same_chamber(weights[0], weights[1]);
  rep.seconds = sw.seconds();
  return rep;
}

RunReport cmd_tiling(const WeightedTiling& t, TilingMode mode) {
  Stopwatch sw;
  RunReport rep;
  rep.inputs_digest = digest({to_json(t)});
  Json& out = rep.verdicts;
  switch (mode) {
    case TilingMode::kValidate: {
      rep.command = "tiling validate";
      ValidationReport v = validate_tiling(t);
      out["tile_accepted"] = v.tile_accepted;
      Json pairs = Json::array();
      for (const auto& p : v.pairs) {
        pairs.push_back({{"tiles", {p.i + 1, p.j + 1}},
                         {"intersection_dim", p.intersection_dim},
                         {"face_fitting", p.face_fitting},
                         {"interiors_disjoint", p.interiors_disjoint}});
      }
      out["pairs"] = std::move(pairs);
      Json vols = Json::array();
      for (const auto& q : v.piece_volumes) vols.push_back(to_json(q));
      out["piece_volumes"] = std::move(vols);
      out["volume_sum"] = to_json(v.volume_sum);
      out["window_volume"] = to_json(v.window_volume);
      out["face_fitting"] = v.face_fitting;
      out["volumes_match"] = v.volumes_match;
      out["interiors_disjoint"] = v.interiors_disjoint;
      out["valid"] = v.valid;
      rep.verdict = v.valid;
      break;
    }
    case TilingMode::kStrata: {
      rep.command = "tiling strata";
      StrataPoset sp = strata_poset(t);
      Json cells = Json::array();
      for (const auto& c : sp.cells) {
        Json tiles = Json::array();
        for (int id : c.tiles) tiles.push_back(id + 1);
        cells.push_back({{"dim", c.dim},
                         {"shifted_dim", c.shifted_dim},
                         {"divisor", c.divisor},
                         {"on_faces", subset_to_json(c.on_faces)},
                         {"tiles", tiles},
                         {"vertices", vertices_json(c.vertices)}});
      }
      Json rel = Json::array();
      for (auto [a, b] : sp.relation) rel.push_back({a + 1, b + 1});
      Json faces = Json::array();
      for (const auto& f : sp.divisor_faces) {
        faces.push_back({{"tile", f.tile + 1},
                         {"element", f.element + 1},
                         {"dim", f.dim ? Json(*f.dim) : Json(nullptr)},
                         {"codim", f.codim ? Json(*f.codim) : Json(nullptr)}});
      }
      Json shifted = Json::array();
      for (int i = 0; i < sp.interior_count; ++i) shifted.push_back(sp.cells[i].shifted_dim);
      out["interior_cells"] = sp.interior_count;
      out["interior_shifted_dims"] = std::move(shifted);
      out["cells"] = std::move(cells);
      out["relation"] = std::move(rel);
      out["divisor_faces"] = std::move(faces);
      break;
    }
    case TilingMode::kParents: {
      rep.command = "tiling parents";
      ParentCover pc = parent_cover(t);
      Json parents = Json::array();
      for (const auto& p : pc.parents) parents.push_back(to_json(p));
      Json overlaps = Json::array();
      for (auto [a, b] : pc.overlaps) overlaps.push_back({a + 1, b + 1});
      out["parents"] = std::move(parents);
      out["overlaps"] = std::move(overlaps);
      out["volume_sum"] = to_json(pc.volume_sum);
      out["hypersimplex_volume"] = to_json(pc.hypersimplex_volume);
      out["covers"] = pc.covers;
      rep.verdict = pc.covers;
      break;
    }
    case TilingMode::kReconstruct: {
      rep.command = "tiling reconstruct";
      Json tiles = Json::array();
      bool all = true;
      for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        auto target = weighted_polytope(t.tiles[i], t.weight);
        Json tj = {{"tile", i + 1}, {"accepted", target.has_value()}};
        if (target) {
          HPolytope rebuilt = reconstruct_polytope(incidence_of(t.tiles[i]), t.weight);
          bool eq = polytopes_equal(rebuilt, *target);
          tj["roundtrip_equal"] = eq;
          tj["polytope"] = to_json(rebuilt);
          all = all && eq;
        }
        tiles.push_back(std::move(tj));
      }
      out["tiles"] = std::move(tiles);
      out["roundtrip"] = all;
      rep.verdict = all;
      break;
    }
  }
  rep.seconds = sw.seconds();
  return rep;
}

std::vector<std::string> suite_names() {
  return {"git-lc-equiv", "chamber-coincide", "degree-gen", "reconstruct-roundtrip"};
}

int default_trials(const std::string& suite) {
  if (suite == "git-lc-equiv") return 200;
  if (suite == "chamber-coincide") return 300;
  if (suite == "reconstruct-roundtrip") return 100;
  return 0;
}

RunReport cmd_suite(const std::string& name, std::uint64_t seed, std::optional<int> trials) {
  Stopwatch sw;
  const int t = trials.value_or(default_trials(name));
  if (t < 0) throw Error(ErrorKind::kInput, "trial count must be non-negative");
  SuiteResult res;
  if (name == "git-lc-equiv") {
    res = run_git_lc_equiv(seed, t);
  } else if (name == "chamber-coincide") {
    res = run_chamber_coincide(seed, t, chamber_suite_sizes());
  } else if (name == "degree-gen") {
    res = run_degree_gen(chamber_suite_sizes(), {2, 3});
  } else if (name == "reconstruct-roundtrip") {
    res = run_reconstruct_roundtrip(seed, t);
  } else {
    throw Error(ErrorKind::kInput, "unknown suite: " + name);
  }
  RunReport rep;
  rep.command = "suite " + name;
  rep.inputs_digest = digest({name, t});
  if (name != "degree-gen") rep.seed = seed;
  Json j = to_json(res);
  rep.counterexamples = j["counterexamples"];
  j.erase("counterexamples");
  rep.verdicts = std::move(j);
  rep.verdict = res.passed();
  rep.seconds = sw.seconds();
  return rep;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out = fixtures::tiling_names();
  for (const char* extra : {"3-degs", "3-degs-q1", "3-degs-q2", "triple-point", "doubled-point",
                            "weight-w", "weight-w-prime", "weight-w-double-prime",
                            "weight-triple-point"}) {
    out.push_back(extra);
  }
  return out;
}

std::optional<Json> fixture_json(const std::string& name) {
  if (auto t = fixtures::tiling(name)) return to_json(*t);
  if (name == "3-degs") return to_json(fixtures::three_degs());
  if (name == "3-degs-q1") return Json{{"coords", to_json(fixtures::three_degs_q1())}};
  if (name == "3-degs-q2") return Json{{"coords", to_json(fixtures::three_degs_q2())}};
  if (name == "triple-point") return to_json(fixtures::triple_point());
  if (name == "doubled-point") return to_json(fixtures::doubled_point());
  if (name == "weight-w") return to_json(fixtures::example_w());
  if (name == "weight-w-prime") return to_json(fixtures::example_w_prime());
  if (name == "weight-w-double-prime") return to_json(fixtures::example_w_double_prime());
  if (name == "weight-triple-point") {
    return to_json(Weight(3, {Rational(2, 3), Rational(2, 3), 1, 1, Rational(2, 3)}));
  }
  return std::nullopt;
}

}  // namespace whsa
