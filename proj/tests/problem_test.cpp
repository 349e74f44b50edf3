// Copyright 2026 The gaugecert Authors
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


#include <gtest/gtest.h>

#include "gaugecert/error.hpp"
#include "gaugecert/obstruct.hpp"
#include "gaugecert/problem.hpp"

namespace gaugecert {
namespace {

constexpr const char* kFigure8Problem = R"({
  "kind": "surgery-config",
  "strands": [
    {"knot": "unknot", "coefficient": "2"},
    {"knot": "figure8", "coefficient": "-3"},
    {"knot": "unknot", "coefficient": "-11/2"}
  ]
})";

TEST(Problem, RationalJson) {
  EXPECT_EQ(RationalToJson(Rational(-7, 3)), Json("-7/3"));
  EXPECT_EQ(RationalFromJson(Json("4/6")), Rational(2, 3));
  EXPECT_EQ(RationalFromJson(Json(5)), Rational(5));
  EXPECT_THROW(RationalFromJson(Json(true)), Error);
}

TEST(Problem, SeifertAndGramRoundTrip) {
  const SeifertData s({{2, 1}, {3, 1}, {5, -4}});
  EXPECT_EQ(SeifertFromJson(SeifertToJson(s)), s);
  const GramForm g(RatMatrix{{Rational(-1, 2), Rational(1, 3)},
                             {Rational(1, 3), Rational(-1)}});
  EXPECT_EQ(GramFromJson(GramToJson(g)), g);
  const CeProblem p = CeProblemFromJson(ParseJson(
      R"({"form": {"gram": [[-1, 0], [0, -9]]}, "e": [3, 1],
          "restrictions": [{"modulus": 4, "row": [1, 0]}]})"));
  EXPECT_EQ(p.e, (IntVector{3, 1}));
  ASSERT_EQ(p.restrictions.size(), 1u);
  EXPECT_EQ(p.restrictions[0].modulus, 4);
}

TEST(Problem, ReportRoundTrip) {
  const ObstructionReport r = SolveProblem(ParseJson(kFigure8Problem));
  const Json j = ReportToJson(r);
  EXPECT_EQ(ReportFromJson(j), r);
  EXPECT_EQ(ReportToJson(ReportFromJson(j)).dump(), j.dump());
  EXPECT_EQ(j.at("conclusion"), "ObstructedPositiveDefinite");
}

TEST(Problem, SolveAllKinds) {
  EXPECT_EQ(SolveProblem(ParseJson(R"({"kind": "seifert",
                                       "pairs": [[2, 1], [3, 1], [5, -4]]})"))
                .conclusion,
            Conclusion::kObstructedPositiveDefinite);
  EXPECT_EQ(SolveProblem(ParseJson(R"({"kind": "sfqhs-family", "p": 3, "q": 5,
                                       "d": 7, "n": [6, 48, 342, 2400]})"))
                .conclusion,
            Conclusion::kLinearlyIndependentFamily);
  EXPECT_EQ(SolveProblem(ParseJson(kFigure8Problem)).conclusion,
            Conclusion::kObstructedPositiveDefinite);
}

TEST(Problem, CustomKnotAndProfile) {
  const Strand s = StrandFromJson(ParseJson(
      R"({"knot": {"name": "k", "seifert_matrix": [[1, 1], [0, -1]]},
          "a": 3, "b": 1,
          "cs_profile": {"denominators": [3, 24], "provenance": "table"}})"));
  EXPECT_EQ(s.knot_name, "k");
  ASSERT_TRUE(s.cs_profile.has_value());
  EXPECT_EQ(s.cs_profile->denominators, (std::set<std::int64_t>{3, 24}));
  const Strand cat = StrandFromJson(ParseJson(R"({"knot": "figure-8", "coefficient": -3})"));
  EXPECT_TRUE(cat.cs_profile.has_value());
  const Strand none = StrandFromJson(ParseJson(R"({"knot": "trefoil", "coefficient": -3})"));
  EXPECT_FALSE(none.cs_profile.has_value());
}

TEST(Problem, MalformedInput) {
  auto code = [](const std::string& text) {
    try {
      SolveProblem(ParseJson(text));
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::kInvalidArgument;
  };
  EXPECT_EQ(code("{"), Errc::kParseError);
  EXPECT_EQ(code(R"({"kind": "nope"})"), Errc::kParseError);
  EXPECT_EQ(code(R"({"pairs": []})"), Errc::kParseError);
  EXPECT_EQ(code(R"({"kind": "seifert", "pairs": "x"})"), Errc::kParseError);
  EXPECT_EQ(code(R"({"kind": "surgery-config", "strands": [
                     {"knot": "figure8", "coefficient": "-3",
                      "cs_profile": {"denominators": []}}]})"),
            Errc::kParseError);
}

}  // namespace
}  // namespace gaugecert
