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
#include <memory>
#include <string>

#include "gaugecert/rational.hpp"

namespace gaugecert {

// Multiprecision evaluation of (4/a) sum_{k=1}^{a-1} cot(pi k/a)
// cot(pi k b/a) sin^2(pi k l/a). Tables of cot and sin^2 are built once per
// order so a full (b, l) sweep costs O(a) per value.
//
// Error bound: with p-bit working precision every table entry is within
// a^2 2^(6-p) of its true value and has magnitude at most a, so the result
// is within a^4 2^(9-p) of the exact sum. ErrorBoundLog2 reports that
// exponent rounded up.
class FloatOracle {
 public:
  static constexpr long kDefaultPrecision = 256;

  // Precision may be overridden by GAUGECERT_ORACLE_PRECISION (tests only).
  explicit FloatOracle(std::int64_t a, long precision_bits = 0);
  ~FloatOracle();
  FloatOracle(FloatOracle&&) noexcept;
  FloatOracle& operator=(FloatOracle&&) noexcept;

  std::int64_t order() const;
  long precision() const;
  long ErrorBoundLog2() const;

  // (4/a) sum_k cot(pi k/a) cot(pi k b/a) sin^2(pi k l/a), i.e. rho(L(a,b), l).
  double Sum(std::int64_t b, std::int64_t l) const;
  std::string SumDecimal(std::int64_t b, std::int64_t l, int digits = 40) const;
  // log2 |oracle - exact|, or -infinity if they coincide at working precision.
  double Log2Distance(std::int64_t b, std::int64_t l,
                      const Rational& exact) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

double FloatOracleSum(std::int64_t a, std::int64_t b, std::int64_t l);

}  // namespace gaugecert
