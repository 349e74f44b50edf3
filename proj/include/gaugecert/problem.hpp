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

#include <string>

#include "json.hpp"

#include "gaugecert/lattice.hpp"
#include "gaugecert/obstruct.hpp"
#include "gaugecert/rational.hpp"
#include "gaugecert/report.hpp"
#include "gaugecert/seifert.hpp"

namespace gaugecert {

using Json = nlohmann::ordered_json;

// Rationals travel as "num/den" strings; integers are also accepted on input.
Json RationalToJson(const Rational& r);
Rational RationalFromJson(const Json& j);

Json SeifertToJson(const SeifertData& s);           // {"pairs": [[a, b], ...]}
SeifertData SeifertFromJson(const Json& j);

Json GramToJson(const GramForm& g);                 // {"rank", "gram", "scale"}
GramForm GramFromJson(const Json& j);
CeProblem CeProblemFromJson(const Json& j);

Json ReportToJson(const ObstructionReport& r);
ObstructionReport ReportFromJson(const Json& j);

Strand StrandFromJson(const Json& j);
SurgeryConfig SurgeryConfigFromJson(const Json& j);

// Dispatches on "kind": "seifert", "sfqhs-family" or "surgery-config".
// Malformed documents raise kParseError.
ObstructionReport SolveProblem(const Json& problem);

// Parses text, mapping JSON syntax errors to kParseError.
Json ParseJson(const std::string& text);

}  // namespace gaugecert
