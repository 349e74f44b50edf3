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
#include <span>
#include <vector>

#include "gaugecert/rational.hpp"

namespace gaugecert {

std::int64_t Gcd(std::int64_t a, std::int64_t b);  // non-negative
std::int64_t Lcm(std::int64_t a, std::int64_t b);
// Representative of x mod m in [0, m).
std::int64_t Mod(std::int64_t x, std::int64_t m);
// Inverse of x mod m in [0, m); throws kNoSolution if gcd(x, m) != 1.
std::int64_t ModInverse(std::int64_t x, std::int64_t m);
std::int64_t CheckedMul(std::int64_t a, std::int64_t b);
std::int64_t CheckedAdd(std::int64_t a, std::int64_t b);

// Solves (a_1...a_n) * sum_i b_i / a_i = target for pairwise coprime moduli.
// For i < n the b_i are taken in (0, a_i) (or 0 when a_i = 1); b_n absorbs
// the remainder.
std::vector<std::int64_t> CrtSolve(std::span<const std::int64_t> moduli,
                                   std::int64_t target);

// Minus-sign continued fraction a/b = c_1 - 1/(c_2 - 1/(... - 1/c_m)),
// every c_i >= 2.
struct HJExpansion {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::vector<std::int64_t> terms;

  Rational Evaluate() const;
};

HJExpansion HjExpand(std::int64_t a, std::int64_t b);

}  // namespace gaugecert
