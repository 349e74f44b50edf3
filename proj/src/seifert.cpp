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

#include "gaugecert/seifert.hpp"

#include "gaugecert/error.hpp"
#include "gaugecert/numtheory.hpp"
#include "gaugecert/rational.hpp"

namespace gaugecert {

SeifertData::SeifertData(std::vector<SeifertPair> pairs)
    : pairs_(std::move(pairs)) {
  for (const SeifertPair& p : pairs_) {
    Require(p.a >= 1, Errc::kInvalidArgument,
            "Seifert multiplicity must be positive, got " + std::to_string(p.a));
    Require(Gcd(p.a, p.b) == 1, Errc::kInvalidArgument,
            "Seifert pair (" + std::to_string(p.a) + "," +
                std::to_string(p.b) + ") is not coprime");
  }
}

std::int64_t SeifertData::ProductA() const {
  std::int64_t a = 1;
  for (const SeifertPair& p : pairs_) a = CheckedMul(a, p.a);
  return a;
}

SeifertData SeifertData::Reversed() const {
  std::vector<SeifertPair> out = pairs_;
  for (SeifertPair& p : out) p.b = -p.b;
  return SeifertData(std::move(out));
}

std::string SeifertData::str() const {
  std::string out = "S(0;";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(pairs_[i].a) + "," +
           std::to_string(pairs_[i].b) + ")";
  }
  return out + ")";
}

std::int64_t DInvariant(const SeifertData& s) {
  BigInt a = 1;
  for (const SeifertPair& p : s.pairs()) a *= BigInt(static_cast<long>(p.a));
  BigInt d = 0;
  for (const SeifertPair& p : s.pairs()) {
    d += (a / BigInt(static_cast<long>(p.a))) * BigInt(static_cast<long>(p.b));
  }
  return ToInt64(d);
}

bool CheckH1Z2(const SeifertData& s) {
  int even = 0;
  for (const SeifertPair& p : s.pairs()) even += (p.a % 2 == 0);
  return even <= 1;
}

std::int64_t MeridianHolonomy(std::int64_t a, std::int64_t b) {
  Require(a >= 1, Errc::kInvalidArgument, "holonomy modulus must be positive");
  Require(Gcd(a, b) == 1, Errc::kInvalidArgument,
          "holonomy needs gcd(a, b) = 1");
  return Mod(-b, a);
}

std::pair<std::int64_t, std::int64_t> TorusKnotRS(std::int64_t p,
                                                  std::int64_t q) {
  Require(p >= 2 && q >= 2, Errc::kBadParameters,
          "torus knot parameters must be at least 2");
  Require(Gcd(p, q) == 1, Errc::kBadParameters,
          "torus knot parameters must be coprime");
  // r q = -1 mod p.
  const std::int64_t r0 = Mod(-ModInverse(q, p), p);
  const std::int64_t r1 = r0 - p;
  const std::int64_t r = (r0 <= -r1) ? r0 : r1;
  const std::int64_t s = (-1 - r * q) / p;
  return {r, s};
}

SeifertData TorusKnotSurgery(const SurgeryDesc& desc) {
  const auto [r, s] = TorusKnotRS(desc.p, desc.q);
  Require(desc.n > 0, Errc::kBadParameters,
          "surgery datum n must be positive");
  const std::int64_t third =
      CheckedAdd(CheckedMul(CheckedMul(desc.p, desc.q), desc.n), -desc.d);
  Require(third > desc.n, Errc::kBadParameters,
          "torus knot surgery needs pqn - d > n");
  Require(Gcd(desc.n, desc.d) == 1, Errc::kBadParameters,
          "torus knot surgery needs gcd(n, d) = 1");
  return SeifertData({{desc.p, r}, {desc.q, s}, {third, desc.n}});
}

}  // namespace gaugecert
