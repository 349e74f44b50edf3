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

#pragma once

#include <cstdint>
#include <string>

#include "gaugecert/rational.hpp"

namespace gaugecert {

// L(a, b) oriented as -a/b surgery on the unknot. b is normalized into
// (0, a) on construction; given_b keeps the caller's representative.
struct LensSpace {
  LensSpace(std::int64_t a, std::int64_t b);

  std::int64_t a;
  std::int64_t b;
  std::int64_t given_b;

  std::string str() const;
  friend bool operator==(const LensSpace& x, const LensSpace& y) {
    return x.a == y.a && x.b == y.b;
  }
};

enum class SumRoute {
  kTrace,     // group-ring trace, O(a)
  kField,     // aggregated reduction in Q(zeta_a), O(a^2)
  kTermwise,  // one field inverse per summand; small a only
};

// (4/a) sum_{k=1}^{a-1} cot(pi k/a) cot(pi k b/a) sin^2(pi k l/a).
// This is the rho invariant of the SO(2) connection with holonomy l; the
// reducible SO(3) connection it induces has the same rho.
Rational RhoLens(const LensSpace& lens, std::int64_t l,
                 SumRoute route = SumRoute::kTrace);

// 2c*/a - 1 with 0 < c* < a and c c* = -1 mod a.
Rational NzClosedForm(std::int64_t a, std::int64_t c);
// (2/a) sum_k cot(pi k c/a) cot(pi k/a) sin^2(pi k/a), evaluated exactly.
Rational NzSum(std::int64_t a, std::int64_t c,
               SumRoute route = SumRoute::kField);

struct LensCsValues {
  Rational tau_lower;       // 4/a
  std::int64_t modulus = 0;  // CS values are 4k/a mod 4
};
LensCsValues LensCs(const LensSpace& lens);

}  // namespace gaugecert
