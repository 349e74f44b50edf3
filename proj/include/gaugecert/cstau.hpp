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
#include <set>
#include <span>
#include <string>
#include <vector>

#include "gaugecert/lens.hpp"
#include "gaugecert/rational.hpp"
#include "gaugecert/seifert.hpp"

namespace gaugecert {

enum class CsSource { kLens, kSeifertIrreducible, kSeifertReducible, kUserSupplied };

const char* CsSourceName(CsSource s);

// Every relevant Chern-Simons value on the component is a rational whose
// denominator divides one of the listed integers.
struct CsDenominatorProfile {
  std::string component;
  std::set<std::int64_t> denominators;
  CsSource source = CsSource::kUserSupplied;
  std::string provenance;

  void Validate() const;
  friend bool operator==(const CsDenominatorProfile&,
                         const CsDenominatorProfile&) = default;
};

// A lower bound for tau, always in (0, 4].
class TauBound {
 public:
  explicit TauBound(Rational value);
  const Rational& value() const { return value_; }
  friend bool operator==(const TauBound&, const TauBound&) = default;

 private:
  Rational value_;
};

TauBound TauLowerFromDenominator(std::int64_t k);
// 1 / max(denominators).
TauBound TauLowerFromProfile(const CsDenominatorProfile& profile);
TauBound TauLowerLens(const LensSpace& lens);
// min(1/a, 1/d); kHypothesisFailed unless d is odd and positive.
TauBound TauLowerSeifert(const SeifertData& s);
// kEmptyBoundary for an empty list.
TauBound TauHat(std::span<const TauBound> bounds);
// tau - p1; kNegativeCharge if p1 < 0.
Rational CompactnessMargin(const Rational& p1, const TauBound& tau);

// The lower bounds used for the boundary of the SFQHS cobordism at index N
// (1-based): 1/p, 1/q, 1/(pq(pq n_i - d)) for i < N, 1/d, 1/(pq n_N - d).
std::vector<TauBound> SfqhsTauBounds(std::int64_t p, std::int64_t q,
                                     std::int64_t d,
                                     std::span<const std::int64_t> n_list,
                                     std::size_t n_index);

}  // namespace gaugecert
