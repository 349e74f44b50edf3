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

#include "gaugecert/index.hpp"

#include <string>

#include "gaugecert/error.hpp"
#include "gaugecert/lens.hpp"
#include "gaugecert/numtheory.hpp"

namespace gaugecert {

Rational IndPlusGeneral(const IndexInputs& inp) {
  Require(inp.b_plus >= 0, Errc::kInvalidArgument, "b+ must be non-negative");
  Rational sum;
  for (const BoundaryTerm& t : inp.boundary) {
    Require(t.h >= 0, Errc::kInvalidArgument, "h must be non-negative");
    if (t.trivial) {
      Require(t.h == 3 && t.rho.is_zero(), Errc::kInvalidArgument,
              "trivial boundary terms need h = 3 and rho = 0");
      continue;
    }
    sum += Rational(3 - t.h) - t.rho;
  }
  return Rational(2) * inp.p1 - Rational(3 * (1 + inp.b_plus)) +
         Rational(1, 2) * sum;
}

std::vector<std::int64_t> KCoefficients(const SeifertData& s) {
  std::vector<std::int64_t> out;
  out.reserve(s.size());
  for (const SeifertPair& p : s.pairs()) {
    Require(p.a >= 2, Errc::kDegenerate,
            "strand with a = 1 has no K coefficient");
    // b + K a = b mod a in (0, a).
    out.push_back((Mod(p.b, p.a) - p.b) / p.a);
  }
  return out;
}

std::int64_t IndClosedForm(const SeifertData& s) {
  std::int64_t sum = 0;
  for (std::int64_t k : KCoefficients(s)) sum = CheckedAdd(sum, k);
  return CheckedAdd(2 * static_cast<std::int64_t>(s.size()) - 3,
                    CheckedMul(-2, sum));
}

Rational IndTrigForm(const SeifertData& s) {
  const std::int64_t d = DInvariant(s);
  const std::int64_t a = s.ProductA();
  Rational total = Rational(2 * d, a) - Rational(3) +
                   Rational(static_cast<std::int64_t>(s.size()));
  for (const SeifertPair& p : s.pairs()) {
    Require(p.a >= 2, Errc::kDegenerate, "strand with a = 1 in trig form");
    // (2/a_i) sum = rho(L(a_i, b_i), b_i) / 2.
    total += Rational(1, 2) * RhoLens(LensSpace(p.a, p.b), p.b);
  }
  return total;
}

IndexInputs SeifertIndexInputs(const SeifertData& s) {
  IndexInputs inp;
  inp.p1 = Rational(DInvariant(s), s.ProductA());
  inp.b_plus = 0;
  for (const SeifertPair& p : s.pairs()) {
    Require(p.a >= 2, Errc::kDegenerate, "strand with a = 1 has no lens");
    const LensSpace lens(p.a, -p.b);
    inp.boundary.push_back(
        {1, RhoLens(lens, MeridianHolonomy(p.a, p.b)), false});
  }
  return inp;
}

namespace {

std::int64_t CheckedIndex(const SeifertData& s) {
  const std::int64_t closed = IndClosedForm(s);
  const Rational trig = IndTrigForm(s);
  if (trig != Rational(closed)) {
    Fail(Errc::kClosedFormMismatch,
         s.str() + ": closed form " + std::to_string(closed) +
             " but trigonometric form " + trig.str());
  }
  return closed;
}

}  // namespace

std::int64_t RInvariant(const SeifertData& s) {
  const std::int64_t d = DInvariant(s);
  Require(d == 1, Errc::kNotHomologySphere,
          s.str() + " has d = " + std::to_string(d) + ", not 1");
  return CheckedIndex(s);
}

std::int64_t IndPlusSeifertQhs(const SeifertData& s) {
  const std::int64_t d = DInvariant(s);
  Require(d > 0, Errc::kNotHomologySphere,
          s.str() + " has d = " + std::to_string(d) + ", need d > 0");
  return CheckedIndex(s);
}

}  // namespace gaugecert
