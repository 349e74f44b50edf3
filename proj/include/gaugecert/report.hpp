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
#include <variant>
#include <vector>

#include "gaugecert/rational.hpp"

namespace gaugecert {

using ReportValue = std::variant<bool, std::int64_t, Rational, std::string>;

enum class Verdict { kPass, kFail };

struct HypothesisLine {
  std::string name;
  std::string reference;  // the formula or condition being checked
  ReportValue value;
  Verdict verdict = Verdict::kFail;

  friend bool operator==(const HypothesisLine&, const HypothesisLine&) = default;
};

enum class Conclusion {
  kObstructedPositiveDefinite,
  kLinearlyIndependentFamily,
  kInconclusive,
};

const char* ConclusionName(Conclusion c);
Conclusion ConclusionFromName(const std::string& name);

struct ObstructionReport {
  std::string problem;
  std::vector<HypothesisLine> hypotheses;
  Conclusion conclusion = Conclusion::kInconclusive;
  std::vector<std::string> provenance;

  void Add(std::string name, std::string reference, ReportValue value,
           bool pass);
  bool AllPass() const;
  // Sets the conclusion to `success` iff every line passes.
  void Conclude(Conclusion success);
  const HypothesisLine* Find(const std::string& name) const;

  friend bool operator==(const ObstructionReport&,
                         const ObstructionReport&) = default;
};

std::string ValueString(const ReportValue& v);
std::string RenderText(const ObstructionReport& report);

}  // namespace gaugecert
