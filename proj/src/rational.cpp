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

#include "gaugecert/rational.hpp"

#include <limits>
#include <ostream>

#include "gaugecert/error.hpp"

namespace gaugecert {

const char* ErrcName(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kParseError: return "ParseError";
    case Errc::kNonRational: return "NonRational";
    case Errc::kNoSolution: return "NoSolution";
    case Errc::kBadParameters: return "BadParameters";
    case Errc::kDegenerate: return "Degenerate";
    case Errc::kNotHomologySphere: return "NotHomologySphere";
    case Errc::kClosedFormMismatch: return "ClosedFormMismatch";
    case Errc::kHypothesisFailed: return "HypothesisFailed";
    case Errc::kEmptyBoundary: return "EmptyBoundary";
    case Errc::kNegativeCharge: return "NegativeCharge";
    case Errc::kNotDefinite: return "NotDefinite";
    case Errc::kSingularPivot: return "SingularPivot";
  }
  return "Unknown";
}

bool IsInternalError(Errc code) {
  return code == Errc::kNonRational || code == Errc::kClosedFormMismatch;
}

std::string ToString(const BigInt& n) { return n.get_str(); }

std::int64_t ToInt64(const BigInt& n) {
  if (!n.fits_slong_p()) {
    Fail(Errc::kInvalidArgument, "integer " + n.get_str() + " exceeds 64 bits");
  }
  return n.get_si();
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  Require(den != 0, Errc::kInvalidArgument, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational Rational::Parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    BigInt v;
    std::string str(s);
    if (str.empty() || (str.size() == 1 && (str[0] == '-' || str[0] == '+'))) {
      Fail(Errc::kParseError, "malformed rational '" + std::string(text) + "'");
    }
    if (str[0] == '+') str.erase(0, 1);
    for (std::size_t i = (str[0] == '-') ? 1 : 0; i < str.size(); ++i) {
      if (str[i] < '0' || str[i] > '9') {
        Fail(Errc::kParseError, "malformed rational '" + std::string(text) + "'");
      }
    }
    if (v.set_str(str, 10) != 0) {
      Fail(Errc::kParseError, "malformed rational '" + std::string(text) + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) Fail(Errc::kParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

BigInt Rational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
  Require(!is_zero(), Errc::kInvalidArgument, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  Require(!o.is_zero(), Errc::kInvalidArgument, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace gaugecert
