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

#include "gaugecert/float_oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <vector>

#include "bigfloat.hpp"
#include "gaugecert/error.hpp"
#include "gaugecert/numtheory.hpp"

namespace gaugecert {

using internal::BigFloat;

struct FloatOracle::Impl {
  std::int64_t a = 0;
  long prec = 0;
  std::vector<BigFloat> cot;   // cot(pi j/a), j in [0, a); entry 0 unused
  std::vector<BigFloat> sin2;  // sin^2(pi j/a)

  BigFloat Evaluate(std::int64_t b, std::int64_t l) const {
    Require(Gcd(b, a) == 1, Errc::kInvalidArgument, "b must be coprime to a");
    const std::int64_t bm = Mod(b, a), lm = Mod(l, a);
    BigFloat acc(prec), term(prec);
    for (std::int64_t k = 1; k < a; ++k) {
      const auto kb = static_cast<std::size_t>((k * bm) % a);
      const auto kl = static_cast<std::size_t>((k * lm) % a);
      mpfr_mul(term.get(), cot[static_cast<std::size_t>(k)].get(),
               cot[kb].get(), MPFR_RNDN);
      mpfr_mul(term.get(), term.get(), sin2[kl].get(), MPFR_RNDN);
      mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
    }
    mpfr_mul_ui(acc.get(), acc.get(), 4, MPFR_RNDN);
    mpfr_div_si(acc.get(), acc.get(), a, MPFR_RNDN);
    return acc;
  }
};

FloatOracle::FloatOracle(std::int64_t a, long precision_bits)
    : impl_(std::make_unique<Impl>()) {
  Require(a >= 2, Errc::kInvalidArgument, "order must be at least 2");
  if (precision_bits <= 0) {
    precision_bits = kDefaultPrecision;
    if (const char* env = std::getenv("GAUGECERT_ORACLE_PRECISION")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 128) precision_bits = v;
    }
  }
  impl_->a = a;
  impl_->prec = precision_bits;
  const auto n = static_cast<std::size_t>(a);
  impl_->cot.reserve(n);
  impl_->sin2.reserve(n);
  BigFloat angle(precision_bits);
  for (std::size_t j = 0; j < n; ++j) {
    BigFloat c(precision_bits), s(precision_bits);
    mpfr_const_pi(angle.get(), MPFR_RNDN);
    mpfr_mul_ui(angle.get(), angle.get(), j, MPFR_RNDN);
    mpfr_div_si(angle.get(), angle.get(), a, MPFR_RNDN);
    if (j != 0) mpfr_cot(c.get(), angle.get(), MPFR_RNDN);
    mpfr_sin(s.get(), angle.get(), MPFR_RNDN);
    mpfr_sqr(s.get(), s.get(), MPFR_RNDN);
    impl_->cot.push_back(std::move(c));
    impl_->sin2.push_back(std::move(s));
  }
}

FloatOracle::~FloatOracle() = default;
FloatOracle::FloatOracle(FloatOracle&&) noexcept = default;
FloatOracle& FloatOracle::operator=(FloatOracle&&) noexcept = default;

std::int64_t FloatOracle::order() const { return impl_->a; }
long FloatOracle::precision() const { return impl_->prec; }

long FloatOracle::ErrorBoundLog2() const {
  return 9 - impl_->prec +
         4 * static_cast<long>(std::ceil(std::log2(static_cast<double>(impl_->a))));
}

double FloatOracle::Sum(std::int64_t b, std::int64_t l) const {
  return mpfr_get_d(impl_->Evaluate(b, l).get(), MPFR_RNDN);
}

std::string FloatOracle::SumDecimal(std::int64_t b, std::int64_t l,
                                    int digits) const {
  BigFloat v = impl_->Evaluate(b, l);
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", digits, v.get());
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

double FloatOracle::Log2Distance(std::int64_t b, std::int64_t l,
                                 const Rational& exact) const {
  BigFloat v = impl_->Evaluate(b, l);
  mpfr_sub_q(v.get(), v.get(), exact.raw().get_mpq_t(), MPFR_RNDN);
  if (mpfr_zero_p(v.get())) return -std::numeric_limits<double>::infinity();
  mpfr_abs(v.get(), v.get(), MPFR_RNDN);
  mpfr_log2(v.get(), v.get(), MPFR_RNDU);
  return mpfr_get_d(v.get(), MPFR_RNDU);
}

double FloatOracleSum(std::int64_t a, std::int64_t b, std::int64_t l) {
  return FloatOracle(a).Sum(b, l);
}

}  // namespace gaugecert
