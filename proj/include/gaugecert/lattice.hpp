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

#include "gaugecert/numtheory.hpp"
#include "gaugecert/rational.hpp"

namespace gaugecert {

using RatMatrix = std::vector<std::vector<Rational>>;
using IntVector = std::vector<std::int64_t>;

// Symmetric rational pairing on Z^r with scale * gram integral.
class GramForm {
 public:
  GramForm() = default;
  // Scale is the least common denominator of the entries.
  explicit GramForm(RatMatrix gram);
  // Checks that scale * gram is integral.
  GramForm(RatMatrix gram, std::int64_t scale);
  static GramForm Diagonal(std::span<const std::int64_t> diag);

  std::size_t rank() const { return gram_.size(); }
  const RatMatrix& gram() const { return gram_; }
  const Rational& at(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  std::int64_t scale() const { return scale_; }

  Rational Pair(std::span<const std::int64_t> x,
                std::span<const std::int64_t> y) const;
  Rational Determinant() const;

  friend bool operator==(const GramForm&, const GramForm&) = default;

 private:
  void CheckSymmetric() const;
  RatMatrix gram_;
  std::int64_t scale_ = 1;
};

// Exact leading-minor test; singular forms are not definite.
bool IsNegativeDefinite(const GramForm& g);

// Tridiagonal, diagonal -c_i, off-diagonal 1.
GramForm PlumbingGram(const HJExpansion& h);

struct Restriction {
  std::int64_t modulus = 1;
  IntVector row;
  friend bool operator==(const Restriction&, const Restriction&) = default;
};

struct CeProblem {
  GramForm form;
  IntVector e;
  std::vector<Restriction> restrictions;
};

// All e' with e'.e' = e.e, e' = e mod 2 and row.e' = +-row.e mod m for each
// restriction, one per +- pair (first nonzero coordinate positive), sorted.
// Fincke-Pohst enumeration over the exact LDL^T factorization of -G.
// kNotDefinite unless the form is negative definite.
std::vector<IntVector> EnumerateCe(const CeProblem& problem);

// span(e) + (e-perp intersected with Z^r) = Z^r, i.e. |w.e| = 1 for the
// primitive integer vector w proportional to G e. kNotDefinite unless the
// form is negative definite.
bool DetectOrthogonalSplit(const GramForm& g, std::span<const std::int64_t> e);

enum class ReducibleOutcome { kOdd, kCounterexampleFound };

struct DiophantineSolution {
  std::int64_t k = 0, l2 = 0, l3 = 0;
  friend bool operator==(const DiophantineSolution&,
                         const DiophantineSolution&) = default;
};

struct ReducibleVerdict {
  ReducibleOutcome outcome = ReducibleOutcome::kOdd;
  std::int64_t a = 0;  // pq(pq n_N - d)
  std::int64_t candidates_scanned = 0;
  std::vector<DiophantineSolution> solutions;
};

// Scans k in [0, a) with k = 1 mod p, k = +-1 mod q, k = +-1 mod (pq n_N - d)
// for solutions of d^2 = l3 a + (d k + a l2)^2 with l3 >= 0 and
// |d k + a l2| <= d + extra_window * a. kHypothesisFailed if a <= d^2,
// p, q, d are not pairwise coprime and odd, or torsion_odd is false.
ReducibleVerdict SfqhsReducibleCount(std::int64_t p, std::int64_t q,
                                     std::int64_t d, std::int64_t n_last,
                                     bool torsion_odd,
                                     std::int64_t extra_window = 0);

}  // namespace gaugecert
