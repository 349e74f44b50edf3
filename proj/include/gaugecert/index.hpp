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
#include <vector>

#include "gaugecert/rational.hpp"
#include "gaugecert/seifert.hpp"

namespace gaugecert {

struct BoundaryTerm {
  std::int64_t h = 3;
  Rational rho;
  bool trivial = true;
};

struct IndexInputs {
  Rational p1;
  std::int64_t b_plus = 0;
  std::vector<BoundaryTerm> boundary;
};

// 2 p1 - 3(1 + b+) + (1/2) sum over nontrivial terms of (3 - h - rho).
Rational IndPlusGeneral(const IndexInputs& inp);

// K_i with 0 < b_i + K_i a_i < a_i; kDegenerate for a_i = 1.
std::vector<std::int64_t> KCoefficients(const SeifertData& s);

// 2n - 3 - 2 sum K_i.
std::int64_t IndClosedForm(const SeifertData& s);

// 2d/a - 3 + n + sum_i (2/a_i) sum_k cot(pi k/a_i) cot(pi k b_i/a_i)
// sin^2(pi k b_i/a_i), exact.
Rational IndTrigForm(const SeifertData& s);

// Index inputs for the reducible bundle whose boundary pieces are the lens
// spaces L(a_i, -b_i) with holonomy -b_i: p1 = d/a, b+ = 0, h = 1.
IndexInputs SeifertIndexInputs(const SeifertData& s);

// Closed form, asserted equal to the trigonometric form
// (kClosedFormMismatch otherwise). kNotHomologySphere unless d = 1.
std::int64_t RInvariant(const SeifertData& s);
// Same for any d > 0.
std::int64_t IndPlusSeifertQhs(const SeifertData& s);

}  // namespace gaugecert
