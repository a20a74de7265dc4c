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

#include <gtest/gtest.h>

#include "whsa/fixtures.h"

namespace whsa {
namespace {

TEST(Json, RoundTrips) {
  for (const auto& name : fixtures::tiling_names()) {
    WeightedTiling t = *fixtures::tiling(name);
    Json j = to_json(t);
    EXPECT_EQ(to_json(tiling_from_json(j)), j) << name;
  }
  Arrangement a = fixtures::three_degs();
  EXPECT_EQ(arrangement_from_json(to_json(a)).forms(), a.forms());
  Weight w = fixtures::example_w();
  EXPECT_EQ(weight_from_json(to_json(w)), w);
  EXPECT_EQ(to_json(w)["b"][4], "9/10");
  EXPECT_EQ(to_json(a.matroid())["bases"][0], Json::parse("[1,2,3]"));
}

TEST(Json, MalformedInputs) {
  EXPECT_THROW(weight_from_json(Json::parse(R"({"r":2,"b":["1","x"]})")), Error);
  EXPECT_THROW(weight_from_json(Json::parse(R"({"b":["1","1"]})")), Error);
  EXPECT_THROW(matroid_from_json(Json::parse(R"({"n":3,"r":2,"bases":[[1,4]]})")), Error);
  EXPECT_THROW(point_from_json(Json::parse("[1,2]")), Error);
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), Error);
}

TEST(Commands, LcReport) {
  RunReport r = cmd_lc(fixtures::three_degs(), fixtures::example_w(), std::nullopt);
  EXPECT_FALSE(r.verdict);
  EXPECT_EQ(r.exit_code(), kExitFalse);
  EXPECT_EQ(r.verdicts["lc"]["violator"], Json::parse("[1,2,5]"));
  RunReport at = cmd_lc(fixtures::three_degs(), unit_weight(3, 5), QVector{1, 2, 3});
  EXPECT_TRUE(at.verdict);
  EXPECT_EQ(at.verdicts["vanishing_set"], Json::array());
}

TEST(Commands, GitReport) {
  RunReport r = cmd_git(fixtures::three_degs(), unit_weight(3, 5), fixtures::three_degs_q1());
  EXPECT_FALSE(r.verdicts["semistable"].get<bool>());
  EXPECT_TRUE(r.verdicts["stable_implies_semistable"].get<bool>());
  EXPECT_TRUE(r.verdicts["semistable_equals_lc_at"].get<bool>());
  RunReport g = cmd_git(fixtures::three_degs(), unit_weight(3, 5), {1, 2, 3});
  EXPECT_TRUE(g.verdict);
  EXPECT_FALSE(g.verdicts["certificates"]["semistable_witness"].is_null());
}

TEST(Commands, Chamber) {
  RunReport r = cmd_chamber({fixtures::example_w_prime(), fixtures::example_w(),
                             fixtures::example_w_double_prime()},
                            false);
  EXPECT_EQ(r.verdicts["pairs"][0]["order"], "greater");
  EXPECT_EQ(r.verdicts["pairs"][2]["order"], "greater");
  EXPECT_TRUE(r.verdicts["pairs"][0]["i_in_closure_of_j"].get<bool>());
  EXPECT_THROW(cmd_chamber({fixtures::example_w()}, false), Error);
  RunReport same = cmd_chamber({unit_weight(2, 4), unit_weight(2, 4)}, true);
  EXPECT_TRUE(same.verdict);
  EXPECT_TRUE(same.verdicts["pairs"][0]["crosscheck_agrees"].get<bool>());
  EXPECT_THROW(cmd_chamber({unit_weight(3, 7), unit_weight(3, 7)}, true), Error);
}

TEST(Commands, TilingModes) {
  WeightedTiling t = *fixtures::tiling("octahedron");
  EXPECT_TRUE(cmd_tiling(t, TilingMode::kValidate).verdict);
  EXPECT_EQ(cmd_tiling(t, TilingMode::kStrata).verdicts["interior_shifted_dims"], Json::parse("[1,1,0]"));
  EXPECT_TRUE(cmd_tiling(t, TilingMode::kParents).verdict);
  EXPECT_TRUE(cmd_tiling(t, TilingMode::kReconstruct).verdict);
}

TEST(Commands, DeterministicReports) {
  RunReport a = cmd_suite("git-lc-equiv", 99, 20);
  RunReport b = cmd_suite("git-lc-equiv", 99, 20);
  EXPECT_EQ(to_json(a, false).dump(), to_json(b, false).dump());
  EXPECT_FALSE(to_json(a, false).contains("seconds"));
  EXPECT_TRUE(to_json(a, true).contains("seconds"));
  EXPECT_EQ(a.seed, 99u);
  EXPECT_NE(cmd_suite("git-lc-equiv", 100, 20).inputs_digest, "");
  EXPECT_THROW(cmd_suite("nope", 1, std::nullopt), Error);
}

TEST(Commands, Digest) {
  EXPECT_EQ(digest(std::vector<Json>{}), "cbf29ce484222325");
  EXPECT_NE(digest({Json("a"), Json("b")}), digest({Json("ab")}));
  EXPECT_EQ(digest({Json(1)}), digest({Json(1)}));
}

TEST(Commands, Fixtures) {
  for (const auto& name : fixture_names()) EXPECT_TRUE(fixture_json(name).has_value()) << name;
  EXPECT_FALSE(fixture_json("missing").has_value());
  EXPECT_EQ(weight_from_json(*fixture_json("weight-w")), fixtures::example_w());
}

}  // namespace
}  // namespace whsa
