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

std::int64_t EulerPhi(std::int64_t n);

// Coefficients of the n-th cyclotomic polynomial, constant term first.
// Built by dividing x^n - 1 by Phi_m for every proper divisor m of n and
// memoized; safe to call from several threads.
const std::vector<std::int64_t>& CyclotomicPolynomial(std::int64_t n);

// Element of Q(zeta_n), stored as the unique representative of degree
// < phi(n) in Q[x]/(Phi_n).
class CycloElement {
 public:
  explicit CycloElement(std::int64_t order);

  static CycloElement FromRational(std::int64_t order, const Rational& value);
  // zeta^exponent; negative exponents allowed.
  static CycloElement RootPower(std::int64_t order, std::int64_t exponent);
  // sum_j coeffs[j] zeta^j over group-ring coordinates j in [0, order).
  static CycloElement FromGroupRing(std::int64_t order,
                                    std::span<const Rational> coeffs);
  // sum_j (coeffs[j] / denominator) zeta^j, reduced with integer arithmetic.
  static CycloElement FromGroupRing(std::int64_t order,
                                    std::span<const BigInt> coeffs,
                                    const BigInt& denominator);

  std::int64_t order() const { return order_; }
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;

  // Image under zeta -> zeta^k; k must be a unit mod the order.
  CycloElement Galois(std::int64_t k) const;
  // Complex conjugate, zeta -> zeta^{-1}.
  CycloElement Conj() const { return Galois(-1); }
  // Field inverse by extended Euclid against Phi_n.
  CycloElement Inverse() const;

  CycloElement& operator+=(const CycloElement& o);
  CycloElement& operator-=(const CycloElement& o);
  CycloElement& operator*=(const CycloElement& o);
  CycloElement& operator*=(const Rational& s);

  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  friend CycloElement operator*(CycloElement a, const CycloElement& b) { return a *= b; }
  friend CycloElement operator*(CycloElement a, const Rational& s) { return a *= s; }
  CycloElement operator-() const;

  friend bool operator==(const CycloElement& a, const CycloElement& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void CheckSameOrder(const CycloElement& o) const;

  std::int64_t order_;
  std::vector<Rational> coeffs_;
};

// The constant coefficient; kNonRational if any other coefficient survives.
Rational RationalExtract(const CycloElement& x);

// cot(pi k/a) cot(pi k b/a) sin^2(pi k l/a) as an element of Q(zeta_a).
CycloElement CycloMakeCotCotSin2(std::int64_t a, std::int64_t k,
                                 std::int64_t b, std::int64_t l);

// sum_{k=1}^{a-1} cot(pi k/a) cot(pi k b/a) sin^2(pi k l/a), two exact routes.
//
// CotSumCyclotomic forms the k = 1 summand in the group ring Z[x]/(x^a - 1)
// using 1/(x - 1) = (1/a) sum_j j x^j, sums its images under x -> x^k,
// reduces modulo Phi_a and extracts the rational constant. O(a^2), a <= 4096.
//
// CotSumTrace reads the same total off group-ring coefficients: for G in
// Q[x]/(x^a - 1), sum_{k=0}^{a-1} G(zeta^k) = a * G_0. O(a).
Rational CotSumCyclotomic(std::int64_t a, std::int64_t b, std::int64_t l);
Rational CotSumTrace(std::int64_t a, std::int64_t b, std::int64_t l);

// Sign of a real element (x == Conj(x)), certified by exact zero test plus
// MPFR evaluation with a rigorous error bound at doubling precision.
int CertifiedSign(const CycloElement& x);

}  // namespace gaugecert
