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
#include <string>
#include <utility>
#include <vector>

namespace gaugecert {

struct SeifertPair {
  std::int64_t a = 1;
  std::int64_t b = 0;

  friend bool operator==(const SeifertPair&, const SeifertPair&) = default;
};

// S(0; (a_1, b_1), ..., (a_n, b_n)). Requires a_i >= 1 and gcd(a_i, b_i) = 1.
// The at-most-one-even condition is a hypothesis checked by CheckH1Z2, not an
// invariant, so that failing data can still be reported on.
class SeifertData {
 public:
  SeifertData() = default;
  explicit SeifertData(std::vector<SeifertPair> pairs);

  const std::vector<SeifertPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

  // a = a_1 ... a_n; kBadParameters on 64-bit overflow.
  std::int64_t ProductA() const;
  // Orientation reversal: every b_i changes sign.
  SeifertData Reversed() const;
  std::string str() const;

  friend bool operator==(const SeifertData&, const SeifertData&) = default;

 private:
  std::vector<SeifertPair> pairs_;
};

// a * sum b_i / a_i.
std::int64_t DInvariant(const SeifertData& s);

// True iff at most one a_i is even.
bool CheckH1Z2(const SeifertData& s);

// -b mod a in [1, a - 1]; for a = 1 the only residue is 0.
std::int64_t MeridianHolonomy(std::int64_t a, std::int64_t b);

struct SurgeryDesc {
  std::int64_t p = 0, q = 0, d = 0, n = 0;
};

// (r, s) with p s + r q = -1 and |r| minimal; ties go to positive r.
std::pair<std::int64_t, std::int64_t> TorusKnotRS(std::int64_t p,
                                                  std::int64_t q);

// S(0; (p, r), (q, s), (pqn - d, n)).
SeifertData TorusKnotSurgery(const SurgeryDesc& desc);

}  // namespace gaugecert
