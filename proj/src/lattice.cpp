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

#include "gaugecert/lattice.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "gaugecert/error.hpp"

namespace gaugecert {
namespace {

// Gaussian elimination with row swaps.
Rational DeterminantOf(RatMatrix m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return Rational();
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    const Rational inv = m[k][k].inverse();
    // Plumbing forms are tridiagonal, so only touch the pivot row's support.
    std::vector<std::size_t> support;
    for (std::size_t j = k; j < n; ++j) {
      if (!m[k][j].is_zero()) support.push_back(j);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      const Rational f = m[i][k] * inv;
      for (std::size_t j : support) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

// q_i and mu_ij (j > i) with x^T Q x = sum_i q_i (x_i + sum_j mu_ij x_j)^2.
// Returns false if some pivot is not positive.
bool LdlPositive(const RatMatrix& q, std::vector<Rational>& diag,
                 RatMatrix& mu) {
  const std::size_t n = q.size();
  RatMatrix a = q;
  diag.assign(n, Rational());
  mu.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i].sign() <= 0) return false;
    diag[i] = a[i][i];
    const Rational inv = diag[i].inverse();
    std::vector<std::size_t> support;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a[i][j].is_zero()) continue;
      mu[i][j] = a[i][j] * inv;
      support.push_back(j);
    }
    for (std::size_t k : support) {
      for (std::size_t l : support) a[k][l] -= a[i][k] * mu[i][l];
    }
  }
  return true;
}

RatMatrix Negated(const GramForm& g) {
  RatMatrix q = g.gram();
  for (auto& row : q) {
    for (Rational& x : row) x = -x;
  }
  return q;
}

void RequireDefinite(const GramForm& g) {
  if (!IsNegativeDefinite(g)) {
    Fail(Errc::kNotDefinite, "form is not negative definite");
  }
}

bool CanonicalSign(const IntVector& x) {
  for (std::int64_t c : x) {
    if (c != 0) return c > 0;
  }
  return true;
}

std::int64_t Dot(const IntVector& row, std::span<const std::int64_t> x) {
  __int128 acc = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    acc += static_cast<__int128>(row[i]) * x[i];
  }
  return static_cast<std::int64_t>(acc);
}

}  // namespace

GramForm::GramForm(RatMatrix gram) : gram_(std::move(gram)) {
  CheckSymmetric();
  BigInt l = 1;
  for (const auto& row : gram_) {
    for (const Rational& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  }
  scale_ = ToInt64(l);
}

GramForm::GramForm(RatMatrix gram, std::int64_t scale)
    : gram_(std::move(gram)), scale_(scale) {
  CheckSymmetric();
  Require(scale_ >= 1, Errc::kInvalidArgument, "scale must be positive");
  for (const auto& row : gram_) {
    for (const Rational& x : row) {
      Require((x * Rational(scale_)).is_integer(), Errc::kInvalidArgument,
              "scale * gram is not integral");
    }
  }
}

GramForm GramForm::Diagonal(std::span<const std::int64_t> diag) {
  RatMatrix m(diag.size(), std::vector<Rational>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) m[i][i] = Rational(diag[i]);
  return GramForm(std::move(m));
}

void GramForm::CheckSymmetric() const {
  const std::size_t n = gram_.size();
  for (std::size_t i = 0; i < n; ++i) {
    Require(gram_[i].size() == n, Errc::kInvalidArgument,
            "gram matrix must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Require(gram_[i][j] == gram_[j][i], Errc::kInvalidArgument,
              "gram matrix must be symmetric");
    }
  }
}

Rational GramForm::Pair(std::span<const std::int64_t> x,
                        std::span<const std::int64_t> y) const {
  Require(x.size() == rank() && y.size() == rank(), Errc::kInvalidArgument,
          "vector length does not match rank");
  Rational acc;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    Rational row;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (y[j] != 0) row += gram_[i][j] * Rational(y[j]);
    }
    acc += Rational(x[i]) * row;
  }
  return acc;
}

Rational GramForm::Determinant() const { return DeterminantOf(gram_); }

bool IsNegativeDefinite(const GramForm& g) {
  std::vector<Rational> diag;
  RatMatrix mu;
  return LdlPositive(Negated(g), diag, mu);
}

GramForm PlumbingGram(const HJExpansion& h) {
  const std::size_t m = h.terms.size();
  Require(m >= 1, Errc::kInvalidArgument, "empty continued fraction");
  RatMatrix g(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i) {
    g[i][i] = Rational(-h.terms[i]);
    if (i + 1 < m) g[i][i + 1] = g[i + 1][i] = Rational(1);
  }
  return GramForm(std::move(g), 1);
}

std::vector<IntVector> EnumerateCe(const CeProblem& problem) {
  const GramForm& g = problem.form;
  const std::size_t n = g.rank();
  Require(problem.e.size() == n, Errc::kInvalidArgument,
          "e has the wrong length");
  for (const Restriction& r : problem.restrictions) {
    Require(r.modulus >= 1 && r.row.size() == n, Errc::kInvalidArgument,
            "malformed restriction");
  }
  std::vector<Rational> diag;
  RatMatrix mu;
  if (!LdlPositive(Negated(g), diag, mu)) {
    Fail(Errc::kNotDefinite, "form is not negative definite");
  }
  const Rational target = -g.Pair(problem.e, problem.e);
  std::vector<std::int64_t> targets;
  for (const Restriction& r : problem.restrictions) {
    targets.push_back(Mod(Dot(r.row, problem.e), r.modulus));
  }

  std::vector<IntVector> out;
  IntVector x(n, 0);
  auto accept = [&]() {
    if (!CanonicalSign(x)) return;
    for (std::size_t i = 0; i < n; ++i) {
      if (Mod(x[i] - problem.e[i], 2) != 0) return;
    }
    for (std::size_t j = 0; j < problem.restrictions.size(); ++j) {
      const Restriction& r = problem.restrictions[j];
      const std::int64_t v = Mod(Dot(r.row, x), r.modulus);
      if (v != targets[j] && v != Mod(-targets[j], r.modulus)) return;
    }
    out.push_back(x);
  };
  std::function<void(std::size_t, const Rational&)> descend =
      [&](std::size_t level, const Rational& budget) {
        const std::size_t i = level - 1;
        Rational c;
        for (std::size_t j = i + 1; j < n; ++j) {
          if (x[j] != 0) c -= mu[i][j] * Rational(x[j]);
        }
        // Integers nearest c outward while q_i (x - c)^2 <= budget.
        const BigInt centre = (c + Rational(1, 2)).floor();
        auto visit = [&](const BigInt& xi) {
          const Rational off = Rational(xi) - c;
          const Rational rest = budget - diag[i] * off * off;
          if (rest.sign() < 0) return false;
          x[i] = ToInt64(xi);
          if (i == 0) {
            if (rest.is_zero()) accept();
          } else {
            descend(i, rest);
          }
          return true;
        };
        for (BigInt xi = centre; visit(xi); ++xi) {
        }
        for (BigInt xi = centre - 1; visit(xi); --xi) {
        }
        x[i] = 0;
      };
  if (n == 0) {
    if (target.is_zero()) out.push_back({});
    return out;
  }
  descend(n, target);
  std::sort(out.begin(), out.end());
  return out;
}

bool DetectOrthogonalSplit(const GramForm& g, std::span<const std::int64_t> e) {
  Require(e.size() == g.rank(), Errc::kInvalidArgument,
          "e has the wrong length");
  RequireDefinite(g);
  const std::size_t n = g.rank();
  std::vector<Rational> v(n);
  BigInt den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) v[i] += g.at(i, j) * Rational(e[j]);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v[i].den().get_mpz_t());
  }
  std::vector<BigInt> w(n);
  BigInt content = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational scaled = v[i] * Rational(den);
    w[i] = scaled.num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w[i].get_mpz_t());
  }
  Require(content != 0, Errc::kInvalidArgument, "e must be nonzero");
  BigInt pairing = 0;
  for (std::size_t i = 0; i < n; ++i) {
    pairing += (w[i] / content) * BigInt(static_cast<long>(e[i]));
  }
  return abs(pairing) == 1;
}

ReducibleVerdict SfqhsReducibleCount(std::int64_t p, std::int64_t q,
                                     std::int64_t d, std::int64_t n_last,
                                     bool torsion_odd,
                                     std::int64_t extra_window) {
  Require(p > 0 && q > 0 && d > 0, Errc::kHypothesisFailed,
          "p, q, d must be positive");
  Require(p % 2 && q % 2 && d % 2, Errc::kHypothesisFailed,
          "p, q, d must be odd");
  Require(Gcd(p, q) == 1 && Gcd(p, d) == 1 && Gcd(q, d) == 1,
          Errc::kHypothesisFailed, "p, q, d must be pairwise coprime");
  Require(torsion_odd, Errc::kHypothesisFailed,
          "H^2(N, dN) must have only odd torsion");
  Require(extra_window >= 0, Errc::kInvalidArgument,
          "window extension must be non-negative");
  const std::int64_t pq = CheckedMul(p, q);
  const std::int64_t m = CheckedAdd(CheckedMul(pq, n_last), -d);
  Require(m > 0, Errc::kHypothesisFailed, "pq n_N - d must be positive");
  const std::int64_t a = CheckedMul(pq, m);
  Require(a > CheckedMul(d, d), Errc::kHypothesisFailed,
          "need a = " + std::to_string(a) + " > d^2");

  ReducibleVerdict verdict;
  verdict.a = a;
  const __int128 window = static_cast<__int128>(d) +
                          static_cast<__int128>(extra_window) * a;
  auto floor_div = [](__int128 x, __int128 y) {
    __int128 r = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --r;
    return r;
  };
  for (std::int64_t k = 1 % p; k < a; k += p) {
    if (Mod(k - 1, q) != 0 && Mod(k + 1, q) != 0) continue;
    if (Mod(k - 1, m) != 0 && Mod(k + 1, m) != 0) continue;
    ++verdict.candidates_scanned;
    const __int128 dk = static_cast<__int128>(d) * k;
    const __int128 lo = -floor_div(window + dk, a);  // ceil((-W - dk)/a)
    const __int128 hi = floor_div(window - dk, a);
    for (__int128 l2 = lo; l2 <= hi; ++l2) {
      const __int128 s = dk + a * l2;
      const __int128 rest = static_cast<__int128>(d) * d - s * s;
      if (rest < 0 || rest % a != 0) continue;
      verdict.solutions.push_back({k, static_cast<std::int64_t>(l2),
                                   static_cast<std::int64_t>(rest / a)});
    }
  }
  const bool unique_witness =
      verdict.solutions.size() == 1 &&
      verdict.solutions.front() == DiophantineSolution{1, 0, 0};
  verdict.outcome = unique_witness ? ReducibleOutcome::kOdd
                                   : ReducibleOutcome::kCounterexampleFound;
  return verdict;
}

}  // namespace gaugecert
