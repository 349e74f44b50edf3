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

#include "gaugecert/problem.hpp"

#include <vector>

#include "gaugecert/error.hpp"

namespace gaugecert {
namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    Fail(Errc::kParseError, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::int64_t IntFrom(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    Fail(Errc::kParseError, std::string(what) + " must be an integer");
  }
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> IntListFrom(const Json& j, const char* what) {
  if (!j.is_array()) Fail(Errc::kParseError, std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  for (const Json& x : j) out.push_back(IntFrom(x, what));
  return out;
}

std::vector<std::vector<std::int64_t>> IntMatrixFrom(const Json& j,
                                                     const char* what) {
  if (!j.is_array()) Fail(Errc::kParseError, std::string(what) + " must be an array");
  std::vector<std::vector<std::int64_t>> out;
  for (const Json& row : j) out.push_back(IntListFrom(row, what));
  return out;
}

const char* ValueKind(const ReportValue& v) {
  switch (v.index()) {
    case 0:
      return "boolean";
    case 1:
      return "integer";
    case 2:
      return "rational";
    default:
      return "text";
  }
}

}  // namespace

Json RationalToJson(const Rational& r) { return r.str(); }

Rational RationalFromJson(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Rational::Parse(j.get<std::string>());
    } catch (const Error& e) {
      Fail(Errc::kParseError, e.what());
    }
  }
  Fail(Errc::kParseError, "rational must be a \"num/den\" string or integer");
}

Json SeifertToJson(const SeifertData& s) {
  Json pairs = Json::array();
  for (const SeifertPair& p : s.pairs()) pairs.push_back({p.a, p.b});
  return Json{{"pairs", pairs}};
}

SeifertData SeifertFromJson(const Json& j) {
  std::vector<SeifertPair> pairs;
  for (const auto& row : IntMatrixFrom(Field(j, "pairs"), "pairs")) {
    if (row.size() != 2) Fail(Errc::kParseError, "each pair needs [a, b]");
    pairs.push_back({row[0], row[1]});
  }
  return SeifertData(std::move(pairs));
}

Json GramToJson(const GramForm& g) {
  Json rows = Json::array();
  for (const auto& row : g.gram()) {
    Json r = Json::array();
    for (const Rational& x : row) r.push_back(RationalToJson(x));
    rows.push_back(r);
  }
  return Json{{"rank", g.rank()}, {"gram", rows}, {"scale", g.scale()}};
}

GramForm GramFromJson(const Json& j) {
  const Json& rows = Field(j, "gram");
  if (!rows.is_array()) Fail(Errc::kParseError, "gram must be an array");
  RatMatrix m;
  for (const Json& row : rows) {
    if (!row.is_array()) Fail(Errc::kParseError, "gram rows must be arrays");
    std::vector<Rational> r;
    for (const Json& x : row) r.push_back(RationalFromJson(x));
    m.push_back(std::move(r));
  }
  if (j.contains("rank") &&
      IntFrom(j.at("rank"), "rank") != static_cast<std::int64_t>(m.size())) {
    Fail(Errc::kParseError, "rank does not match gram size");
  }
  if (j.contains("scale")) return GramForm(std::move(m), IntFrom(j.at("scale"), "scale"));
  return GramForm(std::move(m));
}

CeProblem CeProblemFromJson(const Json& j) {
  CeProblem p;
  p.form = GramFromJson(Field(j, "form"));
  p.e = IntListFrom(Field(j, "e"), "e");
  if (j.contains("restrictions")) {
    for (const Json& r : j.at("restrictions")) {
      p.restrictions.push_back({IntFrom(Field(r, "modulus"), "modulus"),
                                IntListFrom(Field(r, "row"), "row")});
    }
  }
  return p;
}

Json ReportToJson(const ObstructionReport& r) {
  Json lines = Json::array();
  for (const HypothesisLine& h : r.hypotheses) {
    Json value;
    switch (h.value.index()) {
      case 0:
        value = std::get<bool>(h.value);
        break;
      case 1:
        value = std::get<std::int64_t>(h.value);
        break;
      case 2:
        value = RationalToJson(std::get<Rational>(h.value));
        break;
      default:
        value = std::get<std::string>(h.value);
    }
    lines.push_back(Json{{"name", h.name},
                         {"reference", h.reference},
                         {"value_kind", ValueKind(h.value)},
                         {"value", value},
                         {"verdict", h.verdict == Verdict::kPass ? "pass" : "fail"}});
  }
  return Json{{"problem", r.problem},
              {"hypotheses", lines},
              {"conclusion", ConclusionName(r.conclusion)},
              {"provenance", r.provenance}};
}

ObstructionReport ReportFromJson(const Json& j) {
  ObstructionReport r;
  try {
    r.problem = Field(j, "problem").get<std::string>();
    for (const Json& line : Field(j, "hypotheses")) {
      HypothesisLine h;
      h.name = Field(line, "name").get<std::string>();
      h.reference = Field(line, "reference").get<std::string>();
      const std::string kind = Field(line, "value_kind").get<std::string>();
      const Json& v = Field(line, "value");
      if (kind == "boolean") {
        h.value = v.get<bool>();
      } else if (kind == "integer") {
        h.value = v.get<std::int64_t>();
      } else if (kind == "rational") {
        h.value = RationalFromJson(v);
      } else if (kind == "text") {
        h.value = v.get<std::string>();
      } else {
        Fail(Errc::kParseError, "unknown value kind '" + kind + "'");
      }
      const std::string verdict = Field(line, "verdict").get<std::string>();
      if (verdict != "pass" && verdict != "fail") {
        Fail(Errc::kParseError, "verdict must be pass or fail");
      }
      h.verdict = verdict == "pass" ? Verdict::kPass : Verdict::kFail;
      r.hypotheses.push_back(std::move(h));
    }
    r.conclusion = ConclusionFromName(Field(j, "conclusion").get<std::string>());
    for (const Json& p : Field(j, "provenance")) {
      r.provenance.push_back(p.get<std::string>());
    }
  } catch (const Json::exception& e) {
    Fail(Errc::kParseError, e.what());
  }
  return r;
}

Strand StrandFromJson(const Json& j) {
  Strand s;
  if (j.contains("knot")) {
    const Json& k = j.at("knot");
    if (k.is_string()) {
      s.knot_name = k.get<std::string>();
      if (!IsCatalogKnot(s.knot_name)) {
        Fail(Errc::kParseError, "unknown catalog knot '" + s.knot_name + "'");
      }
      s.seifert = CatalogKnot(s.knot_name);
    } else if (k.is_object()) {
      s.knot_name = k.contains("name") ? k.at("name").get<std::string>()
                                       : std::string("custom");
      s.seifert = SeifertMatrix(IntMatrixFrom(Field(k, "seifert_matrix"),
                                              "seifert_matrix"));
    } else {
      Fail(Errc::kParseError, "knot must be a name or an object");
    }
  }
  if (j.contains("coefficient")) {
    const SeifertPair p = PairFromCoefficient(RationalFromJson(j.at("coefficient")));
    s.a = p.a;
    s.b = p.b;
  } else {
    s.a = IntFrom(Field(j, "a"), "a");
    s.b = IntFrom(Field(j, "b"), "b");
  }
  if (j.contains("cs_profile")) {
    const Json& c = j.at("cs_profile");
    CsDenominatorProfile prof;
    prof.component = s.knot_name;
    for (std::int64_t k : IntListFrom(Field(c, "denominators"), "denominators")) {
      prof.denominators.insert(k);
    }
    prof.source = CsSource::kUserSupplied;
    if (c.contains("provenance")) prof.provenance = c.at("provenance").get<std::string>();
    try {
      prof.Validate();
    } catch (const Error& e) {
      Fail(Errc::kParseError, e.what());
    }
    s.cs_profile = std::move(prof);
  } else if (!s.is_unknot()) {
    s.cs_profile = CatalogCsProfile(s.knot_name, s.a, s.b);
  }
  return s;
}

SurgeryConfig SurgeryConfigFromJson(const Json& j) {
  SurgeryConfig c;
  for (const Json& s : Field(j, "strands")) c.strands.push_back(StrandFromJson(s));
  return c;
}

ObstructionReport SolveProblem(const Json& problem) {
  std::string kind;
  try {
    kind = Field(problem, "kind").get<std::string>();
  } catch (const Json::exception& e) {
    Fail(Errc::kParseError, e.what());
  }
  try {
    if (kind == "seifert") return CheckFintushelStern(SeifertFromJson(problem));
    if (kind == "surgery-config") {
      return CheckSurgeryConfig(SurgeryConfigFromJson(problem));
    }
    if (kind == "sfqhs-family") {
      const bool torsion_odd =
          problem.contains("torsion_odd") ? problem.at("torsion_odd").get<bool>()
                                          : true;
      const std::string prov = problem.contains("torsion_provenance")
                                   ? problem.at("torsion_provenance").get<std::string>()
                                   : std::string();
      const std::vector<std::int64_t> n = IntListFrom(Field(problem, "n"), "n");
      return CheckSfqhsFamily(IntFrom(Field(problem, "p"), "p"),
                              IntFrom(Field(problem, "q"), "q"),
                              IntFrom(Field(problem, "d"), "d"), n, torsion_odd,
                              prov);
    }
  } catch (const Json::exception& e) {
    Fail(Errc::kParseError, e.what());
  }
  Fail(Errc::kParseError, "unknown problem kind '" + kind + "'");
}

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    Fail(Errc::kParseError, e.what());
  }
}

}  // namespace gaugecert
