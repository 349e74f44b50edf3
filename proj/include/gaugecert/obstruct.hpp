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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaugecert/cstau.hpp"
#include "gaugecert/knots.hpp"
#include "gaugecert/lens.hpp"
#include "gaugecert/rational.hpp"
#include "gaugecert/report.hpp"
#include "gaugecert/seifert.hpp"

namespace gaugecert {

// rho_lens(L, -b mod a) + LT(V, a, b) + LT(V, a, a - b).
// kDegenerate if the knot's Alexander polynomial vanishes at zeta_a^b.
Rational RhoTransferSurgery(const LensSpace& lens, const SeifertMatrix& v);

// One surgered meridian: surgery coefficient -a/b on a copy of `knot`.
struct Strand {
  std::string knot_name = "unknot";
  SeifertMatrix seifert;
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::optional<CsDenominatorProfile> cs_profile;

  bool is_unknot() const { return seifert.size() == 0; }
};

// Coefficient c = -a/b with a > 0.
SeifertPair PairFromCoefficient(const Rational& c);
Rational CoefficientFromPair(const SeifertPair& p);

// Catalog Chern-Simons profile for the figure-8 strand with a = 3.
std::optional<CsDenominatorProfile> CatalogCsProfile(const std::string& knot,
                                                     std::int64_t a,
                                                     std::int64_t b);

struct SurgeryConfig {
  std::vector<Strand> strands;
  SeifertData seifert_data() const;
};

ObstructionReport CheckSurgeryConfig(const SurgeryConfig& config);
// All strands unknotted.
ObstructionReport CheckFintushelStern(const SeifertData& s);

ObstructionReport CheckSfqhsFamily(std::int64_t p, std::int64_t q,
                                   std::int64_t d,
                                   std::span<const std::int64_t> n_list,
                                   bool torsion_odd = true,
                                   const std::string& torsion_provenance = "");

}  // namespace gaugecert
