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

#include "gaugecert/report.hpp"

#include <sstream>

#include "gaugecert/error.hpp"

namespace gaugecert {

const char* ConclusionName(Conclusion c) {
  switch (c) {
    case Conclusion::kObstructedPositiveDefinite:
      return "ObstructedPositiveDefinite";
    case Conclusion::kLinearlyIndependentFamily:
      return "LinearlyIndependentFamily";
    case Conclusion::kInconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

Conclusion ConclusionFromName(const std::string& name) {
  for (Conclusion c : {Conclusion::kObstructedPositiveDefinite,
                       Conclusion::kLinearlyIndependentFamily,
                       Conclusion::kInconclusive}) {
    if (name == ConclusionName(c)) return c;
  }
  Fail(Errc::kParseError, "unknown conclusion '" + name + "'");
}

void ObstructionReport::Add(std::string name, std::string reference,
                            ReportValue value, bool pass) {
  hypotheses.push_back({std::move(name), std::move(reference),
                        std::move(value),
                        pass ? Verdict::kPass : Verdict::kFail});
}

bool ObstructionReport::AllPass() const {
  for (const HypothesisLine& h : hypotheses) {
    if (h.verdict != Verdict::kPass) return false;
  }
  return !hypotheses.empty();
}

void ObstructionReport::Conclude(Conclusion success) {
  conclusion = AllPass() ? success : Conclusion::kInconclusive;
}

const HypothesisLine* ObstructionReport::Find(const std::string& name) const {
  for (const HypothesisLine& h : hypotheses) {
    if (h.name == name) return &h;
  }
  return nullptr;
}

std::string ValueString(const ReportValue& v) {
  struct Visitor {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t n) const { return std::to_string(n); }
    std::string operator()(const Rational& r) const {
      return r.is_integer() ? ToString(r.num()) : r.str();
    }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

std::string RenderText(const ObstructionReport& report) {
  std::ostringstream os;
  os << "problem: " << report.problem << "\n";
  for (const HypothesisLine& h : report.hypotheses) {
    os << (h.verdict == Verdict::kPass ? "  [pass] " : "  [FAIL] ") << h.name
       << ": " << ValueString(h.value);
    if (!h.reference.empty()) os << "    (" << h.reference << ")";
    os << "\n";
  }
  os << "conclusion: " << ConclusionName(report.conclusion) << "\n";
  if (!report.provenance.empty()) {
    os << "provenance:\n";
    for (const std::string& p : report.provenance) os << "  - " << p << "\n";
  }
  return os.str();
}

}  // namespace gaugecert
