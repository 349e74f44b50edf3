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

#include "gaugecert/lens.hpp"

#include "gaugecert/cyclotomic.hpp"
#include "gaugecert/error.hpp"
#include "gaugecert/numtheory.hpp"

namespace gaugecert {
namespace {

Rational CotSum(std::int64_t a, std::int64_t b, std::int64_t l,
                SumRoute route) {
  switch (route) {
    case SumRoute::kTrace:
      return CotSumTrace(a, b, l);
    case SumRoute::kField:
      return CotSumCyclotomic(a, b, l);
    case SumRoute::kTermwise: {
      CycloElement acc(a);
      for (std::int64_t k = 1; k < a; ++k) acc += CycloMakeCotCotSin2(a, k, b, l);
      return RationalExtract(acc);
    }
  }
  Fail(Errc::kInvalidArgument, "unknown summation route");
}

}  // namespace

LensSpace::LensSpace(std::int64_t a_in, std::int64_t b_in)
    : a(a_in), b(0), given_b(b_in) {
  Require(a_in >= 2, Errc::kInvalidArgument,
          "lens space needs a >= 2, got " + std::to_string(a_in));
  Require(Gcd(a_in, b_in) == 1, Errc::kInvalidArgument,
          "lens space needs gcd(a, b) = 1");
  b = Mod(b_in, a_in);
}

std::string LensSpace::str() const {
  return "L(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Rational RhoLens(const LensSpace& lens, std::int64_t l, SumRoute route) {
  const std::int64_t lm = Mod(l, lens.a);
  if (lm == 0) return Rational();
  return Rational(4, lens.a) * CotSum(lens.a, lens.b, lm, route);
}

Rational NzClosedForm(std::int64_t a, std::int64_t c) {
  Require(a >= 2, Errc::kInvalidArgument, "NZ closed form needs a >= 2");
  Require(Gcd(a, c) == 1, Errc::kInvalidArgument,
          "NZ closed form needs gcd(a, c) = 1");
  const std::int64_t c_star = Mod(-ModInverse(c, a), a);
  return Rational(2 * c_star, a) - Rational(1);
}

Rational NzSum(std::int64_t a, std::int64_t c, SumRoute route) {
  Require(a >= 2, Errc::kInvalidArgument, "NZ sum needs a >= 2");
  Require(Gcd(a, c) == 1, Errc::kInvalidArgument, "NZ sum needs gcd(a, c) = 1");
  return Rational(2, a) * CotSum(a, Mod(c, a), 1, route);
}

LensCsValues LensCs(const LensSpace& lens) {
  return LensCsValues{Rational(4, lens.a), lens.a};
}

}  // namespace gaugecert
