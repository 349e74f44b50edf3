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

#include "gaugecert/knots.hpp"

#include "gaugecert/cyclotomic.hpp"
#include "gaugecert/error.hpp"
#include "gaugecert/numtheory.hpp"

namespace gaugecert {
namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Fraction-free Gaussian elimination.
BigInt BareissDeterminant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

LaurentPoly FromDense(const std::vector<BigInt>& coeffs, std::int64_t low) {
  std::map<std::int64_t, BigInt> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) terms[low + static_cast<std::int64_t>(i)] = coeffs[i];
  }
  return LaurentPoly(std::move(terms));
}

LaurentPoly TPowerMinusOne(std::int64_t k) {
  return LaurentPoly({{k, BigInt(1)}, {0, BigInt(-1)}});
}

}  // namespace

LaurentPoly::LaurentPoly(std::map<std::int64_t, BigInt> terms)
    : terms_(std::move(terms)) {
  Prune();
}

LaurentPoly LaurentPoly::Monomial(const BigInt& c, std::int64_t exponent) {
  return LaurentPoly({{exponent, c}});
}

void LaurentPoly::Prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
  }
}

BigInt LaurentPoly::Coefficient(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly::ValueAtOne() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

LaurentPoly LaurentPoly::Normalized() const {
  if (terms_.empty()) return *this;
  const std::int64_t lo = terms_.begin()->first;
  const std::int64_t hi = terms_.rbegin()->first;
  Require((hi - lo) % 2 == 0, Errc::kInvalidArgument,
          "cannot centre a polynomial of odd span");
  const std::int64_t shift = -(lo + hi) / 2;
  const bool flip = ValueAtOne() < 0;
  std::map<std::int64_t, BigInt> out;
  for (const auto& [e, c] : terms_) out[e + shift] = flip ? BigInt(-c) : c;
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::DivideExact(const LaurentPoly& divisor) const {
  Require(!divisor.is_zero(), Errc::kInvalidArgument, "division by zero");
  if (is_zero()) return {};
  const std::int64_t nlo = terms_.begin()->first;
  const std::int64_t dlo = divisor.terms_.begin()->first;
  const std::int64_t dhi = divisor.terms_.rbegin()->first;
  std::vector<BigInt> rem(
      static_cast<std::size_t>(terms_.rbegin()->first - nlo + 1));
  for (const auto& [e, c] : terms_) rem[static_cast<std::size_t>(e - nlo)] = c;
  std::vector<BigInt> den(static_cast<std::size_t>(dhi - dlo + 1));
  for (const auto& [e, c] : divisor.terms_) {
    den[static_cast<std::size_t>(e - dlo)] = c;
  }
  Require(rem.size() >= den.size(), Errc::kInvalidArgument,
          "divisor degree exceeds dividend");
  std::vector<BigInt> quot(rem.size() - den.size() + 1);
  for (std::size_t i = rem.size(); i-- >= den.size();) {
    if (rem[i] == 0) continue;
    Require(rem[i] % den.back() == 0, Errc::kInvalidArgument,
            "division is not exact");
    const BigInt c = rem[i] / den.back();
    const std::size_t shift = i - (den.size() - 1);
    quot[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j) rem[shift + j] -= c * den[j];
  }
  for (const BigInt& r : rem) {
    Require(r == 0, Errc::kInvalidArgument, "division is not exact");
  }
  return FromDense(quot, nlo - dlo);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) terms_[e] += c;
  Prune();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) terms_[e] -= c;
  Prune();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<std::int64_t, BigInt> out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out[ea + eb] += ca * cb;
  }
  return LaurentPoly(std::move(out));
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1 || e == 0) out += ToString(mag);
    if (e != 0) {
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

SeifertMatrix::SeifertMatrix(std::vector<std::vector<std::int64_t>> rows)
    : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  Require(n % 2 == 0, Errc::kInvalidArgument,
          "Seifert matrix must have even size");
  for (const auto& row : rows_) {
    Require(row.size() == n, Errc::kInvalidArgument,
            "Seifert matrix must be square");
  }
  IntMatrix skew(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      skew[i][j] = BigInt(static_cast<long>(rows_[i][j])) -
                   BigInt(static_cast<long>(rows_[j][i]));
    }
  }
  const BigInt det = BareissDeterminant(std::move(skew));
  Require(det == 1 || det == -1, Errc::kInvalidArgument,
          "V - V^T is not unimodular");
}

bool IsCatalogKnot(std::string_view name) {
  return name == "unknot" || name == "trefoil" || name == "figure8" ||
         name == "figure-8";
}

SeifertMatrix CatalogKnot(std::string_view name) {
  if (name == "unknot") return SeifertMatrix();
  if (name == "trefoil") return SeifertMatrix({{-1, 1}, {0, -1}});
  if (name == "figure8" || name == "figure-8") {
    return SeifertMatrix({{1, 1}, {0, -1}});
  }
  Fail(Errc::kInvalidArgument, "unknown catalog knot '" + std::string(name) + "'");
}

LaurentPoly AlexanderTorus(std::int64_t p, std::int64_t q) {
  Require(p >= 2 && q >= 2, Errc::kInvalidArgument,
          "torus knot parameters must be at least 2");
  Require(Gcd(p, q) == 1, Errc::kInvalidArgument,
          "torus knot parameters must be coprime");
  const LaurentPoly num = TPowerMinusOne(CheckedMul(p, q)) * TPowerMinusOne(1);
  return num.DivideExact(TPowerMinusOne(p) * TPowerMinusOne(q)).Normalized();
}

LaurentPoly AlexanderFromSeifert(const SeifertMatrix& v) {
  const std::size_t n = v.size();
  // det(V - t V^T) has degree <= n: sample t = 0..n and interpolate.
  std::vector<Rational> samples(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    IntMatrix m(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] = BigInt(static_cast<long>(v.at(i, j))) -
                  BigInt(static_cast<long>(t)) *
                      BigInt(static_cast<long>(v.at(j, i)));
      }
    }
    samples[t] = Rational(BareissDeterminant(std::move(m)));
  }
  // Newton divided differences, then expand.
  std::vector<Rational> dd = samples;
  for (std::size_t level = 1; level <= n; ++level) {
    for (std::size_t i = n; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<std::int64_t>(level));
      if (i == level) break;
    }
  }
  std::vector<Rational> poly(n + 1), basis{Rational(1)};
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) poly[j] += dd[i] * basis[j];
    // basis *= (t - i)
    std::vector<Rational> next(basis.size() + 1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      next[j + 1] += basis[j];
      next[j] -= basis[j] * Rational(static_cast<std::int64_t>(i));
    }
    basis = std::move(next);
  }
  std::vector<BigInt> coeffs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Require(poly[i].is_integer(), Errc::kNonRational,
            "Alexander interpolation produced a non-integer coefficient");
    coeffs[i] = poly[i].num();
  }
  return FromDense(coeffs, 0).Normalized();
}

bool NondegenerateAt(const LaurentPoly& poly, std::int64_t a, std::int64_t b) {
  Require(a >= 1, Errc::kInvalidArgument, "order must be positive");
  Require(Gcd(a, b) == 1, Errc::kInvalidArgument, "need gcd(a, b) = 1");
  std::vector<Rational> g(static_cast<std::size_t>(a));
  for (const auto& [e, c] : poly.terms()) {
    const std::int64_t idx = static_cast<std::int64_t>(
        (static_cast<__int128>(Mod(e, a)) * Mod(b, a)) % a);
    g[static_cast<std::size_t>(idx)] += Rational(c);
  }
  return !CycloElement::FromGroupRing(a, g).is_zero();
}

namespace {

// Coefficients of det(x I - A), leading 1 first (division-free).
std::vector<CycloElement> Berkowitz(
    const std::vector<std::vector<CycloElement>>& m, std::int64_t order) {
  const std::size_t n = m.size();
  const CycloElement one = CycloElement::FromRational(order, Rational(1));
  const CycloElement zero(order);
  std::vector<CycloElement> p{one};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C.
    std::vector<CycloElement> col{one, -m[r][r]};
    std::vector<CycloElement> vec(r, zero);  // A^k C restricted to rows < r
    for (std::size_t i = 0; i < r; ++i) vec[i] = m[i][r];
    for (std::size_t k = 0; k < r; ++k) {
      CycloElement dot = zero;
      for (std::size_t i = 0; i < r; ++i) dot += m[r][i] * vec[i];
      col.push_back(-dot);
      if (k + 1 == r) break;
      std::vector<CycloElement> next(r, zero);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) next[i] += m[i][j] * vec[j];
      }
      vec = std::move(next);
    }
    std::vector<CycloElement> q(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= i && j < p.size(); ++j) {
        q[i] += col[i - j] * p[j];
      }
    }
    p = std::move(q);
  }
  return p;
}

int SignChanges(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::int64_t LtSignature(const SeifertMatrix& v, std::int64_t a,
                         std::int64_t b) {
  Require(a >= 2 && Mod(b, a) != 0, Errc::kInvalidArgument,
          "signature needs omega != 1");
  const std::size_t n = v.size();
  if (n == 0) return 0;
  const CycloElement one = CycloElement::FromRational(a, Rational(1));
  const CycloElement x = one - CycloElement::RootPower(a, -b);
  const CycloElement xbar = x.Conj();
  std::vector<std::vector<CycloElement>> h(
      n, std::vector<CycloElement>(n, CycloElement(a)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      h[i][j] = x * Rational(v.at(i, j)) + xbar * Rational(v.at(j, i));
    }
  }
  const std::vector<CycloElement> chi = Berkowitz(h, a);
  std::vector<int> pos(n + 1), neg(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const int s = CertifiedSign(chi[k]);
    pos[k] = s;
    // chi(-x): coefficient of x^{n-k} picks up (-1)^{n-k}.
    neg[k] = ((n - k) % 2 == 0) ? s : -s;
  }
  if (pos[n] == 0) {
    Fail(Errc::kSingularPivot,
         "Levine-Tristram form is degenerate at this root of unity");
  }
  return SignChanges(pos) - SignChanges(neg);
}

}  // namespace gaugecert
