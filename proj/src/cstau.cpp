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

#include "gaugecert/cstau.hpp"

#include <algorithm>

#include "gaugecert/error.hpp"
#include "gaugecert/numtheory.hpp"

namespace gaugecert {

const char* CsSourceName(CsSource s) {
  switch (s) {
    case CsSource::kLens:
      return "lens";
    case CsSource::kSeifertIrreducible:
      return "seifert-irreducible";
    case CsSource::kSeifertReducible:
      return "seifert-reducible";
    case CsSource::kUserSupplied:
      return "user-supplied";
  }
  return "unknown";
}

void CsDenominatorProfile::Validate() const {
  Require(!denominators.empty(), Errc::kInvalidArgument,
          "denominator profile for '" + component + "' is empty");
  Require(*denominators.begin() >= 1, Errc::kInvalidArgument,
          "denominators must be positive");
  if (source == CsSource::kUserSupplied) {
    Require(!provenance.empty(), Errc::kInvalidArgument,
            "user-supplied profile for '" + component + "' needs provenance");
  }
}

TauBound::TauBound(Rational value) : value_(std::move(value)) {
  Require(value_ > Rational(0) && value_ <= Rational(4),
          Errc::kInvalidArgument, "tau bound " + value_.str() + " outside (0,4]");
}

TauBound TauLowerFromDenominator(std::int64_t k) {
  Require(k >= 1, Errc::kInvalidArgument, "denominator must be positive");
  return TauBound(Rational(1, k));
}

TauBound TauLowerFromProfile(const CsDenominatorProfile& profile) {
  profile.Validate();
  return TauLowerFromDenominator(*profile.denominators.rbegin());
}

TauBound TauLowerLens(const LensSpace& lens) {
  return TauBound(Rational(4, lens.a));
}

TauBound TauLowerSeifert(const SeifertData& s) {
  const std::int64_t d = DInvariant(s);
  Require(d > 0 && d % 2 != 0, Errc::kHypothesisFailed,
          s.str() + ": need d odd and positive, got " + std::to_string(d));
  return TauBound(Min(Rational(1, s.ProductA()), Rational(1, d)));
}

TauBound TauHat(std::span<const TauBound> bounds) {
  Require(!bounds.empty(), Errc::kEmptyBoundary, "no boundary components");
  Rational best = bounds.front().value();
  for (const TauBound& b : bounds) best = Min(best, b.value());
  return TauBound(best);
}

Rational CompactnessMargin(const Rational& p1, const TauBound& tau) {
  Require(p1.sign() >= 0, Errc::kNegativeCharge,
          "Pontryagin charge " + p1.str() + " is negative");
  return tau.value() - p1;
}

std::vector<TauBound> SfqhsTauBounds(std::int64_t p, std::int64_t q,
                                     std::int64_t d,
                                     std::span<const std::int64_t> n_list,
                                     std::size_t n_index) {
  Require(n_index >= 1 && n_index <= n_list.size(), Errc::kInvalidArgument,
          "SFQHS index out of range");
  const std::int64_t pq = CheckedMul(p, q);
  std::vector<TauBound> out{TauLowerFromDenominator(p),
                            TauLowerFromDenominator(q)};
  for (std::size_t i = 0; i + 1 < n_index; ++i) {
    out.push_back(TauLowerFromDenominator(
        CheckedMul(pq, CheckedAdd(CheckedMul(pq, n_list[i]), -d))));
  }
  out.push_back(TauLowerFromDenominator(d));
  out.push_back(TauLowerFromDenominator(
      CheckedAdd(CheckedMul(pq, n_list[n_index - 1]), -d)));
  return out;
}

}  // namespace gaugecert
