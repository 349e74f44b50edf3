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

#include "gaugecert/numtheory.hpp"

#include <numeric>
#include <string>

#include "gaugecert/error.hpp"

namespace gaugecert {

std::int64_t Gcd(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

std::int64_t Lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return CheckedMul(a / Gcd(a, b), b < 0 ? -b : b);
}

std::int64_t Mod(std::int64_t x, std::int64_t m) {
  Require(m > 0, Errc::kInvalidArgument, "modulus must be positive");
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t ModInverse(std::int64_t x, std::int64_t m) {
  Require(m > 0, Errc::kInvalidArgument, "modulus must be positive");
  if (m == 1) return 0;
  // Extended Euclid on (x mod m, m).
  __int128 old_r = Mod(x, m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 quot = old_r / r;
    const __int128 tr = old_r - quot * r;
    old_r = r;
    r = tr;
    const __int128 ts = old_s - quot * s;
    old_s = s;
    s = ts;
  }
  if (old_r != 1) {
    Fail(Errc::kNoSolution, std::to_string(x) + " is not invertible mod " +
                                std::to_string(m));
  }
  __int128 inv = old_s % m;
  if (inv < 0) inv += m;
  return static_cast<std::int64_t>(inv);
}

std::int64_t CheckedMul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    Fail(Errc::kBadParameters, "64-bit overflow in product");
  }
  return out;
}

std::int64_t CheckedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    Fail(Errc::kBadParameters, "64-bit overflow in sum");
  }
  return out;
}

std::vector<std::int64_t> CrtSolve(std::span<const std::int64_t> moduli,
                                   std::int64_t target) {
  Require(!moduli.empty(), Errc::kInvalidArgument, "no moduli given");
  std::int64_t product = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    Require(moduli[i] >= 1, Errc::kInvalidArgument, "moduli must be positive");
    for (std::size_t j = 0; j < i; ++j) {
      if (Gcd(moduli[i], moduli[j]) != 1) {
        Fail(Errc::kNoSolution, "moduli " + std::to_string(moduli[j]) + " and " +
                                    std::to_string(moduli[i]) + " are not coprime");
      }
    }
    product = CheckedMul(product, moduli[i]);
  }
  if (Gcd(target, product) != 1) {
    Fail(Errc::kNoSolution, "target " + std::to_string(target) +
                                " is not coprime to the product of the moduli");
  }

  const std::size_t n = moduli.size();
  std::vector<std::int64_t> b(n, 0);
  __int128 partial = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::int64_t ai = moduli[i];
    const std::int64_t cofactor = product / ai;
    if (ai == 1) {
      b[i] = 0;
    } else {
      const std::int64_t inv = ModInverse(Mod(cofactor, ai), ai);
      b[i] = static_cast<std::int64_t>(
          (static_cast<__int128>(Mod(target, ai)) * inv) % ai);
    }
    partial += static_cast<__int128>(b[i]) * cofactor;
  }
  const std::int64_t last_cofactor = product / moduli[n - 1];
  const __int128 rest = static_cast<__int128>(target) - partial;
  // Exact by construction: rest vanishes mod every a_i with i < n.
  if (rest % last_cofactor != 0) {
    Fail(Errc::kNoSolution, "internal CRT residue mismatch");
  }
  b[n - 1] = static_cast<std::int64_t>(rest / last_cofactor);
  return b;
}

Rational HJExpansion::Evaluate() const {
  Require(!terms.empty(), Errc::kInvalidArgument, "empty continued fraction");
  Rational value(terms.back());
  for (std::size_t i = terms.size() - 1; i-- > 0;) {
    value = Rational(terms[i]) - value.inverse();
  }
  return value;
}

HJExpansion HjExpand(std::int64_t a, std::int64_t b) {
  Require(a >= 2 && b > 0 && b < a && Gcd(a, b) == 1, Errc::kInvalidArgument,
          "need coprime 0 < b < a, got a=" + std::to_string(a) +
              " b=" + std::to_string(b));
  HJExpansion out{a, b, {}};
  std::int64_t num = a, den = b;
  while (den != 0) {
    const std::int64_t c = (num + den - 1) / den;  // ceil(num/den)
    out.terms.push_back(c);
    const std::int64_t next = c * den - num;
    num = den;
    den = next;
  }
  return out;
}

}  // namespace gaugecert
