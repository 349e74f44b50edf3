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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gaugecert/rational.hpp"

namespace gaugecert {

// Finitely supported integer Laurent polynomial in t; zero terms are never
// stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::map<std::int64_t, BigInt> terms);
  static LaurentPoly Monomial(const BigInt& c, std::int64_t exponent);

  const std::map<std::int64_t, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt Coefficient(std::int64_t exponent) const;
  BigInt ValueAtOne() const;

  // Shift so the exponents are centred on 0 and flip sign so the value at
  // t = 1 is positive. Requires an even span.
  LaurentPoly Normalized() const;

  // Exact division by a divisor; kInvalidArgument if it leaves a remainder.
  LaurentPoly DivideExact(const LaurentPoly& divisor) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string str() const;

 private:
  void Prune();
  std::map<std::int64_t, BigInt> terms_;
};

// Square integer matrix of even size with V - V^T unimodular.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  explicit SeifertMatrix(std::vector<std::vector<std::int64_t>> rows);

  std::size_t size() const { return rows_.size(); }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }
  std::int64_t at(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  std::vector<std::vector<std::int64_t>> rows_;
};

// Built-in catalog: "unknot", "trefoil", "figure8".
SeifertMatrix CatalogKnot(std::string_view name);
bool IsCatalogKnot(std::string_view name);

// (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), normalized.
LaurentPoly AlexanderTorus(std::int64_t p, std::int64_t q);
// det(V - t V^T), normalized.
LaurentPoly AlexanderFromSeifert(const SeifertMatrix& v);

// poly(zeta_a^b) != 0, decided exactly in Q(zeta_a).
bool NondegenerateAt(const LaurentPoly& poly, std::int64_t a, std::int64_t b);

// Signature of (1 - w) V + (1 - conj w) V^T with w = zeta_a^{-b}.
// The Hermitian form's characteristic polynomial is computed exactly over
// Q(zeta_a); its real coefficients are signed by CertifiedSign and
// Descartes' rule (exact for real-rooted polynomials) gives the counts.
// kSingularPivot if the form is degenerate.
std::int64_t LtSignature(const SeifertMatrix& v, std::int64_t a,
                         std::int64_t b);

}  // namespace gaugecert
