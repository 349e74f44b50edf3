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

#include "gaugecert/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <string>

#include "bigfloat.hpp"
#include "gaugecert/error.hpp"
#include "gaugecert/numtheory.hpp"

namespace gaugecert {
namespace {

using Poly = std::vector<Rational>;  // ascending coefficients

void Trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Reduce p in place modulo the monic integer polynomial phi.
void ReduceInPlace(Poly& p, const std::vector<std::int64_t>& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    if (p[i].is_zero()) continue;
    const Rational c = p[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) p[i - deg + j] -= c * Rational(phi[j]);
    }
    p[i] = Rational();
  }
  p.resize(deg);
}

void DivMod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
  rem = num;
  Trim(rem);
  quot.clear();
  if (rem.size() < den.size()) return;
  quot.assign(rem.size() - den.size() + 1, Rational());
  const Rational lead_inv = den.back().inverse();
  for (std::size_t i = rem.size(); i-- >= den.size();) {
    if (rem[i].is_zero()) continue;
    const Rational c = rem[i] * lead_inv;
    const std::size_t shift = i - (den.size() - 1);
    quot[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j) rem[shift + j] -= c * den[j];
  }
  Trim(rem);
  Trim(quot);
}

Poly Multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<std::int64_t> ComputeCyclotomic(std::int64_t n) {
  // x^n - 1, then strip Phi_m for each proper divisor m.
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t m = 1; m < n; ++m) {
    if (n % m != 0) continue;
    const std::vector<std::int64_t>& f = CyclotomicPolynomial(m);
    const std::size_t fd = f.size() - 1;
    std::vector<std::int64_t> q(p.size() - fd, 0);
    for (std::size_t i = p.size(); i-- > fd;) {
      const std::int64_t c = p[i];
      q[i - fd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= fd; ++j) p[i - fd + j] -= c * f[j];
    }
    p = std::move(q);
  }
  return p;
}

BigInt FromInt128(__int128 v) {
  const bool neg = v < 0;
  const unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v)
                                    : static_cast<unsigned __int128>(v);
  BigInt out = BigInt(static_cast<unsigned long>(mag >> 64));
  out <<= 64;
  out += BigInt(static_cast<unsigned long>(mag & ~std::uint64_t{0}));
  return neg ? BigInt(-out) : out;
}

void CheckOrder(std::int64_t order) {
  Require(order >= 1, Errc::kInvalidArgument,
          "cyclotomic order must be positive, got " + std::to_string(order));
}

}  // namespace

std::int64_t EulerPhi(std::int64_t n) {
  Require(n >= 1, Errc::kInvalidArgument, "EulerPhi needs n >= 1");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<std::int64_t>& CyclotomicPolynomial(std::int64_t n) {
  CheckOrder(n);
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<std::int64_t>> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  // Computed unlocked: the recursion re-enters for divisors.
  std::vector<std::int64_t> poly = ComputeCyclotomic(n);
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(n, std::move(poly)).first->second;
}

CycloElement::CycloElement(std::int64_t order) : order_(order) {
  CheckOrder(order);
  coeffs_.assign(static_cast<std::size_t>(EulerPhi(order)), Rational());
}

CycloElement CycloElement::FromRational(std::int64_t order,
                                        const Rational& value) {
  CycloElement out(order);
  out.coeffs_[0] = value;
  return out;
}

CycloElement CycloElement::RootPower(std::int64_t order,
                                     std::int64_t exponent) {
  CheckOrder(order);
  std::vector<Rational> g(static_cast<std::size_t>(order));
  g[static_cast<std::size_t>(Mod(exponent, order))] = Rational(1);
  return FromGroupRing(order, g);
}

CycloElement CycloElement::FromGroupRing(std::int64_t order,
                                         std::span<const Rational> coeffs) {
  CycloElement out(order);
  Poly p(coeffs.begin(), coeffs.end());
  if (p.size() < out.coeffs_.size()) p.resize(out.coeffs_.size());
  ReduceInPlace(p, CyclotomicPolynomial(order));
  out.coeffs_ = std::move(p);
  return out;
}

CycloElement CycloElement::FromGroupRing(std::int64_t order,
                                         std::span<const BigInt> coeffs,
                                         const BigInt& denominator) {
  Require(denominator != 0, Errc::kInvalidArgument, "zero denominator");
  CycloElement out(order);
  const std::vector<std::int64_t>& phi = CyclotomicPolynomial(order);
  const std::size_t deg = phi.size() - 1;
  std::vector<BigInt> p(coeffs.begin(), coeffs.end());
  if (p.size() < deg) p.resize(deg);
  for (std::size_t i = p.size(); i-- > deg;) {
    if (p[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      const std::int64_t f = phi[j];
      if (f > 0) {
        mpz_submul_ui(p[i - deg + j].get_mpz_t(), p[i].get_mpz_t(),
                      static_cast<unsigned long>(f));
      } else if (f < 0) {
        mpz_addmul_ui(p[i - deg + j].get_mpz_t(), p[i].get_mpz_t(),
                      static_cast<unsigned long>(-f));
      }
    }
    p[i] = 0;
  }
  for (std::size_t j = 0; j < deg; ++j) {
    out.coeffs_[j] = Rational(p[j], denominator);
  }
  return out;
}

bool CycloElement::is_zero() const {
  for (const Rational& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CycloElement::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (!coeffs_[j].is_zero()) return false;
  }
  return true;
}

CycloElement CycloElement::Galois(std::int64_t k) const {
  Require(Gcd(k, order_) == 1, Errc::kInvalidArgument,
          "Galois exponent must be a unit mod the order");
  std::vector<Rational> g(static_cast<std::size_t>(order_));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    const std::int64_t idx =
        Mod(static_cast<std::int64_t>(j) * Mod(k, order_), order_);
    g[static_cast<std::size_t>(idx)] += coeffs_[j];
  }
  return FromGroupRing(order_, g);
}

CycloElement CycloElement::Inverse() const {
  Require(!is_zero(), Errc::kInvalidArgument, "inverse of zero");
  const std::vector<std::int64_t>& phi = CyclotomicPolynomial(order_);
  Poly r0(phi.begin(), phi.end());
  Poly r1 = coeffs_;
  Trim(r1);
  Poly t0, t1{Rational(1)};
  Poly quot, rem;
  while (!r1.empty()) {
    DivMod(r0, r1, quot, rem);
    Poly qt = Multiply(quot, t1);
    Poly t2 = t0;
    if (t2.size() < qt.size()) t2.resize(qt.size());
    for (std::size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
    Trim(t2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // Phi is irreducible, so the last nonzero remainder is a constant.
  if (r0.size() != 1) {
    Fail(Errc::kNonRational, "gcd with cyclotomic polynomial is not a unit");
  }
  const Rational scale = r0[0].inverse();
  for (Rational& c : t0) c *= scale;
  if (t0.size() < coeffs_.size()) t0.resize(coeffs_.size());
  ReduceInPlace(t0, phi);
  CycloElement out(order_);
  out.coeffs_ = std::move(t0);
  return out;
}

void CycloElement::CheckSameOrder(const CycloElement& o) const {
  Require(order_ == o.order_, Errc::kInvalidArgument,
          "cyclotomic elements of different orders");
}

CycloElement& CycloElement::operator+=(const CycloElement& o) {
  CheckSameOrder(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& o) {
  CheckSameOrder(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloElement& CycloElement::operator*=(const CycloElement& o) {
  CheckSameOrder(o);
  Poly p = Multiply(coeffs_, o.coeffs_);
  if (p.size() < coeffs_.size()) p.resize(coeffs_.size());
  ReduceInPlace(p, CyclotomicPolynomial(order_));
  coeffs_ = std::move(p);
  return *this;
}

CycloElement& CycloElement::operator*=(const Rational& s) {
  for (Rational& c : coeffs_) c *= s;
  return *this;
}

CycloElement CycloElement::operator-() const {
  CycloElement out = *this;
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

Rational RationalExtract(const CycloElement& x) {
  if (!x.is_rational()) {
    Fail(Errc::kNonRational, "cyclotomic element of order " +
                                 std::to_string(x.order()) +
                                 " has non-constant part");
  }
  return x.coeffs()[0];
}

CycloElement CycloMakeCotCotSin2(std::int64_t a, std::int64_t k,
                                 std::int64_t b, std::int64_t l) {
  Require(a >= 2, Errc::kInvalidArgument, "order must be at least 2");
  Require(Gcd(b, a) == 1, Errc::kInvalidArgument,
          "b must be coprime to a");
  Require(Mod(k, a) != 0, Errc::kInvalidArgument,
          "k = 0 mod a is a cotangent pole");
  using E = CycloElement;
  const E one = E::FromRational(a, Rational(1));
  const E zk = E::RootPower(a, k);
  const E zkb = E::RootPower(a, Mod(k * Mod(b, a), a));
  const std::int64_t kl = Mod(Mod(k, a) * Mod(l, a), a);
  const E sin2_num = E::FromRational(a, Rational(2)) - E::RootPower(a, kl) -
                     E::RootPower(a, -kl);
  const E num = -((zk + one) * (zkb + one) * sin2_num);
  const E den = (zk - one) * (zkb - one) * Rational(4);
  return num * den.Inverse();
}

namespace {

// alpha_j = a[j = 0] + 2j: coefficients of a(x + 1)/(x - 1) in the group ring.
std::int64_t Alpha(std::int64_t a, std::int64_t j) {
  return (j == 0 ? a : 0) + 2 * j;
}

void CheckSumArgs(std::int64_t a, std::int64_t b) {
  Require(a >= 2, Errc::kInvalidArgument, "order must be at least 2");
  Require(Gcd(b, a) == 1, Errc::kInvalidArgument,
          "b must be coprime to a");
}

}  // namespace

Rational CotSumCyclotomic(std::int64_t a, std::int64_t b, std::int64_t l) {
  CheckSumArgs(a, b);
  Require(a <= 4096, Errc::kInvalidArgument,
          "field route supports orders up to 4096");
  const std::size_t n = static_cast<std::size_t>(a);
  const std::int64_t bm = Mod(b, a), lm = Mod(l, a);
  // beta(x) = alpha(x^b), T = alpha * beta, U = T * (2 - x^l - x^-l).
  std::vector<std::int64_t> beta(n, 0), t(n, 0), u(n, 0);
  for (std::int64_t j = 0; j < a; ++j) {
    beta[static_cast<std::size_t>(Mod(j * bm, a))] = Alpha(a, j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t ai = Alpha(a, static_cast<std::int64_t>(i));
    for (std::size_t j = 0; j < n; ++j) t[(i + j) % n] += ai * beta[j];
  }
  for (std::size_t m = 0; m < n; ++m) {
    u[m] = 2 * t[m] - t[(m + n - static_cast<std::size_t>(lm)) % n] -
           t[(m + static_cast<std::size_t>(lm)) % n];
  }
  // H = sum_{k=1}^{a-1} U(x^k).
  std::vector<__int128> h(n, 0);
  for (std::size_t m = 0; m < n; ++m) {
    if (u[m] == 0) continue;
    std::size_t idx = 0;
    for (std::size_t k = 1; k < n; ++k) {
      idx += m;
      if (idx >= n) idx -= n;
      h[idx] += u[m];
    }
  }
  std::vector<BigInt> hz(n);
  for (std::size_t i = 0; i < n; ++i) hz[i] = FromInt128(h[i]);
  const BigInt denom = BigInt(-4) * BigInt(static_cast<long>(a * a));
  return RationalExtract(CycloElement::FromGroupRing(a, hz, denom));
}

Rational CotSumTrace(std::int64_t a, std::int64_t b, std::int64_t l) {
  CheckSumArgs(a, b);
  const std::int64_t b_inv = ModInverse(b, a);
  const std::int64_t lm = Mod(l, a);
  // T_m = sum_j alpha_j beta_{m-j}, beta_i = alpha_{i b^-1}.
  auto t_coeff = [&](std::int64_t m) {
    __int128 acc = 0;
    for (std::int64_t j = 0; j < a; ++j) {
      const std::int64_t i = static_cast<std::int64_t>(
          (static_cast<__int128>(Mod(m - j, a)) * b_inv) % a);
      acc += static_cast<__int128>(Alpha(a, j)) * Alpha(a, i);
    }
    return acc;
  };
  // Each summand is -U(zeta^k)/(4a^2); the k = 0 term of sum_k U(zeta^k) is
  // U(1) = 0, so the total is -a U_0/(4a^2) with U_0 = 2T_0 - T_l - T_-l.
  const __int128 u0 = 2 * t_coeff(0) - t_coeff(lm) - t_coeff(Mod(-lm, a));
  return Rational(BigInt(-FromInt128(u0)),
                  BigInt(4) * BigInt(static_cast<long>(a)));
}

int CertifiedSign(const CycloElement& x) {
  Require(x == x.Conj(), Errc::kInvalidArgument,
          "certified sign needs a real element");
  if (x.is_zero()) return 0;
  const std::int64_t n = x.order();
  Rational abs_sum;
  for (const Rational& c : x.coeffs()) abs_sum += c.abs();
  const std::int64_t terms = x.degree();
  for (mpfr_prec_t prec = 128; prec <= 65536; prec *= 2) {
    internal::BigFloat acc(prec), angle(prec), cosv(prec), coeff(prec);
    for (std::int64_t j = 0; j < terms; ++j) {
      const Rational& c = x.coeffs()[static_cast<std::size_t>(j)];
      if (c.is_zero()) continue;
      mpfr_const_pi(angle.get(), MPFR_RNDN);
      mpfr_mul_si(angle.get(), angle.get(), 2 * j, MPFR_RNDN);
      mpfr_div_si(angle.get(), angle.get(), n, MPFR_RNDN);
      mpfr_cos(cosv.get(), angle.get(), MPFR_RNDN);
      coeff.Set(c);
      mpfr_mul(coeff.get(), coeff.get(), cosv.get(), MPFR_RNDN);
      mpfr_add(acc.get(), acc.get(), coeff.get(), MPFR_RNDN);
    }
    // Angle error <= 2^(5-p), so each cosine is off by <= 2^(6-p); the
    // coefficient, product and running sum add at most (terms + 3) 2^-p
    // relative to sum |c_j|.
    BigInt two_p = 1;
    two_p <<= static_cast<mp_bitcnt_t>(prec);
    const Rational bound =
        abs_sum * Rational(BigInt(static_cast<long>(terms + 80)), two_p);
    mpq_class approx;
    mpfr_get_q(approx.get_mpq_t(), acc.get());
    const Rational value = Rational(BigInt(approx.get_num()),
                                    BigInt(approx.get_den()));
    if (value.abs() > bound) return value.sign();
  }
  Fail(Errc::kSingularPivot,
       "sign not separated from zero at maximum precision");
}

}  // namespace gaugecert
