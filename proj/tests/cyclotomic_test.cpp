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
#include <complex>
#include <numbers>
#include <random>

#include "gaugecert/cyclotomic.hpp"
#include "gaugecert/error.hpp"
#include "oracles.hpp"

namespace gaugecert {
namespace {

std::complex<long double> Embed(const CycloElement& x) {
  const long double pi = std::numbers::pi_v<long double>;
  std::complex<long double> s = 0;
  for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
    const long double c = mpq_get_d(x.coeffs()[j].raw().get_mpq_t());
    const long double t = 2 * pi * static_cast<long double>(j) / x.order();
    s += c * std::complex<long double>(std::cos(t), std::sin(t));
  }
  return s;
}

CycloElement RandomElement(std::int64_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> c(-5, 5), d(1, 4);
  std::vector<Rational> g(static_cast<std::size_t>(n));
  for (auto& v : g) v = Rational(c(rng), d(rng));
  return CycloElement::FromGroupRing(n, g);
}

TEST(Cyclotomic, PolynomialsAndPhi) {
  EXPECT_EQ(CyclotomicPolynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(CyclotomicPolynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(CyclotomicPolynomial(12),
            (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  EXPECT_EQ(EulerPhi(1), 1);
  EXPECT_EQ(EulerPhi(36), 12);
  EXPECT_EQ(EulerPhi(97), 96);
  // Degree of Phi_n matches the totient for a range of n.
  for (std::int64_t n = 1; n <= 150; ++n) {
    ASSERT_EQ(static_cast<std::int64_t>(CyclotomicPolynomial(n).size()) - 1,
              EulerPhi(n));
  }
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto& p105 = CyclotomicPolynomial(105);
  EXPECT_NE(std::find(p105.begin(), p105.end(), -2), p105.end());
}

TEST(Cyclotomic, RootPowerIdentities) {
  for (std::int64_t n : {3, 5, 8, 12, 15}) {
    const CycloElement z = CycloElement::RootPower(n, 1);
    CycloElement p = CycloElement::FromRational(n, Rational(1));
    for (std::int64_t k = 0; k < n; ++k) p *= z;
    EXPECT_EQ(p, CycloElement::FromRational(n, Rational(1))) << n;
    EXPECT_EQ(CycloElement::RootPower(n, -1) * z,
              CycloElement::FromRational(n, Rational(1)));
    // Sum of all n-th roots of unity vanishes for n > 1.
    CycloElement s(n);
    for (std::int64_t k = 0; k < n; ++k) s += CycloElement::RootPower(n, k);
    EXPECT_TRUE(s.is_zero());
  }
}

TEST(Cyclotomic, FieldAxiomsRandom) {
  std::mt19937_64 rng(3303);
  for (std::int64_t n : {5, 7, 9, 12, 16, 21}) {
    const CycloElement one = CycloElement::FromRational(n, Rational(1));
    for (int i = 0; i < 20; ++i) {
      const CycloElement x = RandomElement(n, rng), y = RandomElement(n, rng),
                         z = RandomElement(n, rng);
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      if (!x.is_zero()) {
        EXPECT_EQ(x * x.Inverse(), one);
      }
      EXPECT_EQ(x.Conj().Conj(), x);
      EXPECT_EQ((x * y).Conj(), x.Conj() * y.Conj());
      const auto ex = Embed(x), ey = Embed(y), exy = Embed(x * y);
      EXPECT_NEAR(std::abs(ex * ey - exy), 0.0L, 1e-8L);
    }
  }
}

TEST(Cyclotomic, GaloisIsFieldAutomorphism) {
  std::mt19937_64 rng(4404);
  for (std::int64_t n : {7, 12, 15}) {
    for (std::int64_t k = 1; k < n; ++k) {
      if (oracle::Gcd(k, n) != 1) continue;
      const CycloElement x = RandomElement(n, rng), y = RandomElement(n, rng);
      EXPECT_EQ((x * y).Galois(k), x.Galois(k) * y.Galois(k));
      EXPECT_EQ((x + y).Galois(k), x.Galois(k) + y.Galois(k));
    }
    EXPECT_THROW(RandomElement(n, rng).Galois(n == 15 ? 5 : 0), Error);
  }
}

TEST(Cyclotomic, RationalExtract) {
  EXPECT_EQ(RationalExtract(CycloElement::FromRational(7, Rational(3, 4))),
            Rational(3, 4));
  EXPECT_THROW(RationalExtract(CycloElement::RootPower(7, 1)), Error);
  try {
    RationalExtract(CycloElement::RootPower(5, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNonRational);
  }
  // zeta + zeta^-1 for n = 6 is 1.
  EXPECT_EQ(RationalExtract(CycloElement::RootPower(6, 1) +
                            CycloElement::RootPower(6, -1)),
            Rational(1));
}

TEST(Cyclotomic, CotSumKnownValues) {
  // a = 3: cot(pi/3) = 1/sqrt3 so cot^2 sin^2 sum = 2 * (1/3)(3/4) = 1/2.
  EXPECT_EQ(CotSumTrace(3, 1, 1), Rational(1, 2));
  EXPECT_EQ(CotSumCyclotomic(3, 1, 1), Rational(1, 2));
  EXPECT_EQ(CotSumTrace(3, 2, 1), Rational(-1, 2));
  // a = 4, b = 1, l = 1: k = 1,3 give 1/2 each, k = 2 gives 0.
  EXPECT_EQ(CotSumTrace(4, 1, 1), Rational(1));
}

TEST(Cyclotomic, RoutesAgreeWithEachOtherAndFloats) {
  for (std::int64_t a = 2; a <= 24; ++a) {
    for (std::int64_t b = 1; b < a; ++b) {
      if (oracle::Gcd(a, b) != 1) continue;
      for (std::int64_t l = 0; l < a; ++l) {
        const Rational trace = CotSumTrace(a, b, l);
        ASSERT_EQ(CotSumCyclotomic(a, b, l), trace) << a << " " << b << " " << l;
        CycloElement termwise(a);
        for (std::int64_t k = 1; k < a; ++k) {
          termwise += CycloMakeCotCotSin2(a, k, b, l);
        }
        ASSERT_EQ(RationalExtract(termwise), trace);
        const long double ref = oracle::CotSumLd(a, b, l) * a / 4;
        ASSERT_NEAR(mpq_get_d(trace.raw().get_mpq_t()), ref, 1e-9);
      }
    }
  }
}

TEST(Cyclotomic, SingleTermIsNotRationalButRealAndPositiveSquare) {
  // cot(pi/5)^2 sin^2(pi/5) = cos^2(pi/5) is irrational.
  const CycloElement t = CycloMakeCotCotSin2(5, 1, 1, 1);
  EXPECT_FALSE(t.is_rational());
  EXPECT_EQ(t, t.Conj());
  EXPECT_EQ(CertifiedSign(t), 1);
  EXPECT_EQ(CertifiedSign(-t), -1);
  EXPECT_EQ(CertifiedSign(CycloElement(5)), 0);
  EXPECT_THROW(CertifiedSign(CycloElement::RootPower(5, 1)), Error);
}

TEST(Cyclotomic, CertifiedSignMatchesFloatsOnRandomRealElements) {
  std::mt19937_64 rng(5505);
  for (std::int64_t n : {7, 11, 20, 30}) {
    for (int i = 0; i < 30; ++i) {
      const CycloElement x = RandomElement(n, rng);
      const CycloElement r = x + x.Conj();
      const long double v = Embed(r).real();
      if (std::abs(v) < 1e-6) continue;
      EXPECT_EQ(CertifiedSign(r), v > 0 ? 1 : -1);
    }
  }
}

TEST(Cyclotomic, InverseOfZeroFails) {
  EXPECT_THROW(CycloElement(7).Inverse(), Error);
  EXPECT_THROW(CotSumCyclotomic(5000, 1, 1), Error);
  EXPECT_THROW(CotSumTrace(6, 2, 1), Error);
}

}  // namespace
}  // namespace gaugecert
