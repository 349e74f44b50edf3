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
#include "gaugecert/lens.hpp"
#include "gaugecert/numtheory.hpp"
#include "oracles.hpp"

namespace gaugecert {
namespace {

double ToDouble(const Rational& r) { return mpq_get_d(r.raw().get_mpq_t()); }

TEST(Lens, Normalization) {
  const LensSpace l(5, -2);
  EXPECT_EQ(l.a, 5);
  EXPECT_EQ(l.b, 3);
  EXPECT_EQ(l.given_b, -2);
  EXPECT_EQ(l.str(), "L(5,3)");
  EXPECT_EQ(LensSpace(5, 3), LensSpace(5, 8));
  EXPECT_THROW(LensSpace(1, 0), Error);
  EXPECT_THROW(LensSpace(6, 2), Error);
}

TEST(Lens, RhoKnownValues) {
  EXPECT_EQ(RhoLens(LensSpace(3, 1), 1), Rational(2, 3));
  EXPECT_EQ(RhoLens(LensSpace(3, 2), 1), Rational(-2, 3));
  EXPECT_EQ(RhoLens(LensSpace(7, 3), 0), Rational(0));
  EXPECT_EQ(RhoLens(LensSpace(7, 3), 7), Rational(0));
}

TEST(Lens, RoutesAgree) {
  for (std::int64_t a = 2; a <= 30; ++a) {
    for (std::int64_t b = 1; b < a; ++b) {
      if (oracle::Gcd(a, b) != 1) continue;
      const LensSpace lens(a, b);
      for (std::int64_t l = 0; l < a; ++l) {
        const Rational t = RhoLens(lens, l, SumRoute::kTrace);
        ASSERT_EQ(RhoLens(lens, l, SumRoute::kField), t);
        if (a <= 16) {
          ASSERT_EQ(RhoLens(lens, l, SumRoute::kTermwise), t);
        }
        ASSERT_NEAR(ToDouble(t), static_cast<double>(oracle::CotSumLd(a, b, l)),
                    1e-9);
      }
    }
  }
}

TEST(Lens, RhoSymmetries) {
  // rho(L(a,b), l) = rho(L(a,b), -l); orientation reversal negates rho;
  // rho(L(a,b), l) = rho(L(a,b^-1), l b^-1) by relabelling the generator.
  for (std::int64_t a = 3; a <= 40; ++a) {
    for (std::int64_t b = 1; b < a; ++b) {
      if (oracle::Gcd(a, b) != 1) continue;
      const std::int64_t binv = ModInverse(b, a);
      for (std::int64_t l = 1; l < a; ++l) {
        const Rational r = RhoLens(LensSpace(a, b), l);
        ASSERT_EQ(r, RhoLens(LensSpace(a, b), a - l));
        ASSERT_EQ(-r, RhoLens(LensSpace(a, -b), l));
        ASSERT_EQ(r, RhoLens(LensSpace(a, binv), Mod(l * binv, a)));
      }
    }
  }
}

TEST(Lens, RhoAtOwnParameter) {
  // Reindexing k -> k b^-1 turns rho(L(a,b), b) into twice an NZ sum.
  for (std::int64_t a = 2; a <= 80; ++a) {
    for (std::int64_t b = 1; b < a; ++b) {
      if (oracle::Gcd(a, b) != 1) continue;
      ASSERT_EQ(RhoLens(LensSpace(a, b), b), Rational(2 * (a - 2 * b), a));
    }
  }
}

TEST(Lens, NeumannZagierSmallGrid) {
  for (std::int64_t a = 2; a <= 60; ++a) {
    for (std::int64_t c = 1; c < a; ++c) {
      if (oracle::Gcd(a, c) != 1) continue;
      const Rational closed = NzClosedForm(a, c);
      ASSERT_EQ(NzSum(a, c, SumRoute::kField), closed) << a << " " << c;
      ASSERT_EQ(NzSum(a, c, SumRoute::kTrace), closed);
    }
  }
  EXPECT_EQ(NzClosedForm(5, 2), Rational(-1, 5));
  EXPECT_THROW(NzClosedForm(6, 2), Error);
  EXPECT_THROW(NzSum(1, 1), Error);
}

TEST(Lens, ChernSimonsValues) {
  const LensCsValues cs = LensCs(LensSpace(11, 2));
  EXPECT_EQ(cs.tau_lower, Rational(4, 11));
  EXPECT_EQ(cs.modulus, 11);
}

}  // namespace
}  // namespace gaugecert
