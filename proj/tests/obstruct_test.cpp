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

#include <cmath>

#include "gaugecert/error.hpp"
#include "gaugecert/index.hpp"
#include "gaugecert/numtheory.hpp"
#include "gaugecert/obstruct.hpp"
#include "oracles.hpp"

namespace gaugecert {
namespace {

SurgeryConfig Figure8Config() {
  SurgeryConfig c;
  Strand s1;
  const SeifertPair p1 = PairFromCoefficient(Rational(2));
  s1.a = p1.a;
  s1.b = p1.b;
  Strand s2;
  s2.knot_name = "figure8";
  s2.seifert = CatalogKnot("figure8");
  const SeifertPair p2 = PairFromCoefficient(Rational(-3));
  s2.a = p2.a;
  s2.b = p2.b;
  s2.cs_profile = CatalogCsProfile("figure8", s2.a, s2.b);
  Strand s3;
  const SeifertPair p3 = PairFromCoefficient(Rational(-11, 2));
  s3.a = p3.a;
  s3.b = p3.b;
  c.strands = {s1, s2, s3};
  return c;
}

SeifertData Brieskorn(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
  const std::vector<std::int64_t> m{a1, a2, a3};
  const auto b = CrtSolve(m, 1);
  return SeifertData({{a1, b[0]}, {a2, b[1]}, {a3, b[2]}});
}

TEST(Obstruct, CoefficientConvention) {
  EXPECT_EQ(PairFromCoefficient(Rational(2)), (SeifertPair{2, -1}));
  EXPECT_EQ(PairFromCoefficient(Rational(-3)), (SeifertPair{3, 1}));
  EXPECT_EQ(PairFromCoefficient(Rational(-11, 2)), (SeifertPair{11, 2}));
  EXPECT_THROW(PairFromCoefficient(Rational(0)), Error);
  for (std::int64_t a = 1; a < 20; ++a) {
    for (std::int64_t b = -20; b <= 20; ++b) {
      if (b == 0 || oracle::Gcd(a, b) != 1) continue;
      EXPECT_EQ(PairFromCoefficient(CoefficientFromPair({a, b})),
                (SeifertPair{a, b}));
    }
  }
}

TEST(Obstruct, RhoTransfer) {
  const SeifertMatrix fig8 = CatalogKnot("figure8");
  const SeifertMatrix trefoil = CatalogKnot("trefoil");
  // Zero signatures: the transfer is the plain lens value.
  for (std::int64_t a = 2; a <= 15; ++a) {
    for (std::int64_t b = 1; b < a; ++b) {
      if (oracle::Gcd(a, b) != 1) continue;
      const LensSpace lens(a, b);
      EXPECT_EQ(RhoTransferSurgery(lens, fig8),
                RhoLens(lens, MeridianHolonomy(a, b)));
    }
  }
  EXPECT_EQ(RhoTransferSurgery(LensSpace(3, 1), fig8), Rational(2, 3));
  EXPECT_EQ(RhoTransferSurgery(LensSpace(3, 2), fig8), Rational(-2, 3));
  EXPECT_EQ(RhoTransferSurgery(LensSpace(2, 1), trefoil), Rational(-4));
  try {
    RhoTransferSurgery(LensSpace(6, 1), trefoil);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDegenerate);
  }
}

TEST(Obstruct, Figure8Pipeline) {
  const ObstructionReport r = CheckSurgeryConfig(Figure8Config());
  EXPECT_EQ(r.conclusion, Conclusion::kObstructedPositiveDefinite);
  EXPECT_TRUE(r.AllPass());
  ASSERT_NE(r.Find("Ind⁺"), nullptr);
  EXPECT_EQ(std::get<Rational>(r.Find("Ind⁺")->value), Rational(1));
  EXPECT_EQ(std::get<Rational>(r.Find("ρ(Y2,α2)")->value), Rational(-2, 3));
  EXPECT_EQ(std::get<Rational>(r.Find("p₁")->value), Rational(1, 66));
  EXPECT_EQ(std::get<Rational>(r.Find("τ̂ lower bound")->value),
            Rational(1, 24));
  EXPECT_EQ(std::get<Rational>(r.Find("τ̂ - p₁")->value),
            Rational(1, 24) - Rational(1, 66));
  EXPECT_EQ(std::get<std::int64_t>(r.Find("|C(e)|")->value), 1);
  EXPECT_FALSE(r.provenance.empty());

  // Independent recomputation from floating-point cotangent sums.
  long double ind = 2.0L / 66 - 3;
  ind += (2 - oracle::CotSumLd(2, 1, 1)) / 2;   // L(2,1)
  ind += (2 - oracle::CotSumLd(3, 2, 1)) / 2;   // L(3,2), signatures zero
  ind += (2 - oracle::CotSumLd(11, 9, 2)) / 2;  // L(11,-2), holonomy 2
  EXPECT_NEAR(static_cast<double>(ind), 1.0, 1e-12);
}

TEST(Obstruct, MissingProfileIsInconclusive) {
  SurgeryConfig c = Figure8Config();
  c.strands[1].cs_profile.reset();
  const ObstructionReport r = CheckSurgeryConfig(c);
  EXPECT_EQ(r.conclusion, Conclusion::kInconclusive);
  EXPECT_FALSE(r.AllPass());
}

TEST(Obstruct, FintushelStern) {
  const ObstructionReport r235 = CheckFintushelStern(Brieskorn(2, 3, 5));
  EXPECT_EQ(r235.conclusion, Conclusion::kObstructedPositiveDefinite);
  EXPECT_EQ(std::get<std::int64_t>(r235.Find("R")->value), 1);
  const ObstructionReport r237 = CheckFintushelStern(Brieskorn(2, 3, 7));
  EXPECT_EQ(r237.conclusion, Conclusion::kInconclusive);
  EXPECT_EQ(std::get<std::int64_t>(r237.Find("R")->value), -1);
  EXPECT_EQ(r237.Find("Ind⁺ > 0")->verdict, Verdict::kFail);
  const ObstructionReport r2311 = CheckFintushelStern(Brieskorn(2, 3, 11));
  EXPECT_EQ(std::get<std::int64_t>(r2311.Find("R")->value), 1);
}

TEST(Obstruct, FintushelSternNotHomologySphere) {
  const ObstructionReport r =
      CheckFintushelStern(SeifertData({{2, 1}, {3, 1}, {5, 1}}));
  EXPECT_EQ(r.conclusion, Conclusion::kInconclusive);
  EXPECT_EQ(r.Find("d")->verdict, Verdict::kFail);
}

TEST(Obstruct, SfqhsFamily) {
  const std::vector<std::int64_t> n{6, 48, 342, 2400};
  const ObstructionReport r = CheckSfqhsFamily(3, 5, 7, n);
  EXPECT_EQ(r.conclusion, Conclusion::kLinearlyIndependentFamily);
  for (std::size_t i = 1; i <= n.size(); ++i) {
    const std::string tag = "[N=" + std::to_string(i) + "] ";
    ASSERT_NE(r.Find(tag + "Ind⁺"), nullptr) << tag;
    EXPECT_EQ(std::get<std::int64_t>(r.Find(tag + "Ind⁺")->value), 1);
    EXPECT_EQ(std::get<Rational>(r.Find(tag + "p₁")->value),
              Rational(7, 15 * (15 * n[i - 1] - 7)));
    EXPECT_EQ(r.Find(tag + "|C(e)| odd")->verdict, Verdict::kPass);
  }
}

TEST(Obstruct, SfqhsFamilyFailures) {
  const std::vector<std::int64_t> bad_growth{6, 7};
  EXPECT_EQ(CheckSfqhsFamily(3, 5, 7, bad_growth).conclusion,
            Conclusion::kInconclusive);
  const std::vector<std::int64_t> n{6, 48};
  EXPECT_EQ(CheckSfqhsFamily(3, 5, 7, n, false).conclusion,
            Conclusion::kInconclusive);
  EXPECT_EQ(CheckSfqhsFamily(3, 6, 7, n).conclusion, Conclusion::kInconclusive);
  const std::vector<std::int64_t> none;
  EXPECT_EQ(CheckSfqhsFamily(3, 5, 7, none).conclusion,
            Conclusion::kInconclusive);
}

TEST(Obstruct, ReportsAreDeterministic) {
  EXPECT_EQ(CheckSurgeryConfig(Figure8Config()),
            CheckSurgeryConfig(Figure8Config()));
  const std::vector<std::int64_t> n{6, 48, 342};
  EXPECT_EQ(CheckSfqhsFamily(3, 5, 7, n), CheckSfqhsFamily(3, 5, 7, n));
}

// Soundness: an Obstructed verdict never comes with a failing line, and
// every line the conclusion depends on is present.
TEST(Obstruct, ConclusionSoundnessOverTriples) {
  int obstructed = 0;
  for (std::int64_t a1 : {2, 3, 5}) {
    for (std::int64_t a2 : {3, 5, 7, 11}) {
      for (std::int64_t a3 : {7, 11, 13, 17, 19, 23, 29, 31}) {
        if (oracle::Gcd(a1, a2) != 1 || oracle::Gcd(a1, a3) != 1 ||
            oracle::Gcd(a2, a3) != 1 || a1 >= a2 || a2 >= a3)
          continue;
        const SeifertData s = Brieskorn(a1, a2, a3);
        const ObstructionReport r = CheckFintushelStern(s);
        const std::int64_t rv = RInvariant(s);
        if (r.conclusion == Conclusion::kObstructedPositiveDefinite) {
          ++obstructed;
          EXPECT_TRUE(r.AllPass());
          EXPECT_GT(rv, 0);
          EXPECT_NE(r.Find("τ̂ - p₁"), nullptr);
          EXPECT_NE(r.Find("|C(e)|"), nullptr);
        } else {
          EXPECT_FALSE(r.AllPass());
        }
      }
    }
  }
  EXPECT_GT(obstructed, 0);
}

}  // namespace
}  // namespace gaugecert
