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

#include "gaugecert/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gaugecert/cstau.hpp"
#include "gaugecert/error.hpp"
#include "gaugecert/index.hpp"
#include "gaugecert/lattice.hpp"
#include "gaugecert/lens.hpp"
#include "gaugecert/numtheory.hpp"
#include "gaugecert/obstruct.hpp"
#include "gaugecert/problem.hpp"
#include "gaugecert/selftest.hpp"

namespace gaugecert {
namespace {

std::int64_t ParseInt(const std::string& s) {
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    Fail(Errc::kParseError, "expected an integer, got '" + s + "'");
  }
  return v;
}

std::vector<std::int64_t> ParseIntList(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(ParseInt(item));
  if (out.empty()) Fail(Errc::kParseError, "empty integer list");
  return out;
}

SeifertData ParsePairs(const std::vector<std::string>& tokens) {
  std::vector<SeifertPair> pairs;
  for (const std::string& t : tokens) {
    const std::vector<std::int64_t> ab = ParseIntList(t);
    if (ab.size() != 2) Fail(Errc::kParseError, "pair must be 'a,b', got '" + t + "'");
    pairs.push_back({ab[0], ab[1]});
  }
  if (pairs.empty()) Fail(Errc::kParseError, "no Seifert pairs given");
  return SeifertData(std::move(pairs));
}

void RequireArity(const std::vector<std::string>& args, std::size_t n,
                  const std::string& usage) {
  if (args.size() != n) Fail(Errc::kParseError, "usage: " + usage);
}

std::string ReadSource(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) Fail(Errc::kParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string TextOf(const Json& j) {
  std::ostringstream os;
  for (const auto& [key, value] : j.items()) {
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
       << "\n";
  }
  return os.str();
}

struct Output {
  bool text = false;
  std::string rendered;

  void Emit(const Json& j) { rendered = text ? TextOf(j) : j.dump(2) + "\n"; }
  void Emit(const ObstructionReport& r) {
    rendered = text ? RenderText(r) : ReportToJson(r).dump(2) + "\n";
  }
};

int ExitFor(const Error& e) {
  return IsInternalError(e.code()) ? kExitInternal : kExitBadInput;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"gaugecert: exact gauge-theoretic obstruction certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::string output_path;
  app.add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", output_path, "write output to this file");

  std::vector<std::string> pos;
  auto positional = [&pos](CLI::App* sub, const char* help) {
    sub->add_option("args", pos, help);
    return sub;
  };

  std::string route = "trace";
  auto* rho_lens = positional(app.add_subcommand("rho-lens", "rho(L(a,b), l)"), "a b l");
  rho_lens->add_option("--route", route, "trace, field or termwise")
      ->check(CLI::IsMember({"trace", "field", "termwise"}));

  std::int64_t nz_max = 0;
  auto* nz = positional(app.add_subcommand("nz-check", "NZ sum against closed form"), "a c");
  nz->add_option("--max", nz_max, "check every coprime 1 <= c < a <= max");

  auto* r_inv = positional(app.add_subcommand("r-invariant", "Fintushel-Stern R"), "pairs a,b ...");

  std::string p1_text;
  std::int64_t b_plus = 0;
  std::vector<std::string> terms;
  auto* ind = positional(app.add_subcommand("ind-plus", "index of the reducible bundle"), "pairs a,b ...");
  ind->add_option("--p1", p1_text, "Pontryagin charge for the general formula");
  ind->add_option("--b-plus", b_plus, "b+ of the 4-manifold");
  ind->add_option("--term", terms, "boundary term h,rho (or 'trivial')");

  auto* tau = positional(app.add_subcommand("tau-bound", "Chern-Simons tau lower bounds"),
                         "lens a b | seifert a,b ... | denom k");

  std::string problem_path;
  auto* ce = app.add_subcommand("c-e", "enumerate C(e)");
  ce->add_option("--problem", problem_path, "JSON problem file ('-' for stdin)")
      ->required();

  auto* plumbing = positional(app.add_subcommand("plumbing", "HJ plumbing form for L(a,b)"), "a b");

  std::string fs_problem;
  auto* check_fs = positional(app.add_subcommand("check-fs", "obstruction report"), "pairs a,b ...");
  check_fs->add_option("--problem", fs_problem, "JSON problem file ('-' for stdin)");

  bool torsion_even = false;
  auto* family = positional(app.add_subcommand("check-family", "SFQHS family report"), "p q d n1,n2,...");
  family->add_flag("--torsion-not-odd", torsion_even,
                   "record that H^2(N,dN) has even torsion");

  std::string matrix_text;
  auto* transfer = positional(app.add_subcommand("rho-transfer", "rho of surgery via LT signatures"),
                              "a b knot");
  transfer->add_option("--seifert-matrix", matrix_text, "JSON integer matrix instead of a catalog knot");

  bool quick = false;
  auto* selftest = app.add_subcommand("selftest", "identity grids and brute-force checks");
  selftest->add_flag("--quick", quick, "smaller grids");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  Output o;
  o.text = format == "text";
  int status = kExitOk;
  try {
    if (rho_lens->parsed()) {
      RequireArity(pos, 3, "rho-lens a b l");
      const SumRoute r = route == "field"      ? SumRoute::kField
                         : route == "termwise" ? SumRoute::kTermwise
                                               : SumRoute::kTrace;
      const LensSpace lens(ParseInt(pos[0]), ParseInt(pos[1]));
      o.Emit(Json{{"value", RhoLens(lens, ParseInt(pos[2]), r).str()}});
    } else if (nz->parsed()) {
      if (nz_max > 0) {
        std::int64_t pairs = 0, bad = 0;
        for (std::int64_t a = 2; a <= nz_max; ++a) {
          for (std::int64_t c = 1; c < a; ++c) {
            if (Gcd(a, c) != 1) continue;
            ++pairs;
            bad += NzSum(a, c) != NzClosedForm(a, c);
          }
        }
        o.Emit(Json{{"max", nz_max}, {"pairs", pairs}, {"mismatches", bad}});
        if (bad) status = kExitInternal;
      } else {
        RequireArity(pos, 2, "nz-check a c");
        const std::int64_t a = ParseInt(pos[0]), c = ParseInt(pos[1]);
        const Rational sum = NzSum(a, c), closed = NzClosedForm(a, c);
        o.Emit(Json{{"sum", sum.str()}, {"closed_form", closed.str()},
                    {"agree", sum == closed}});
      }
    } else if (r_inv->parsed()) {
      o.Emit(Json{{"R", RInvariant(ParsePairs(pos))}});
    } else if (ind->parsed()) {
      if (!p1_text.empty()) {
        if (!pos.empty()) Fail(Errc::kParseError, "--p1 excludes Seifert pairs");
        IndexInputs inp;
        inp.p1 = Rational::Parse(p1_text);
        inp.b_plus = b_plus;
        for (const std::string& t : terms) {
          if (t == "trivial") {
            inp.boundary.push_back({3, Rational(), true});
            continue;
          }
          const auto comma = t.find(',');
          if (comma == std::string::npos) Fail(Errc::kParseError, "term must be 'h,rho'");
          inp.boundary.push_back({ParseInt(t.substr(0, comma)),
                                  Rational::Parse(t.substr(comma + 1)), false});
        }
        o.Emit(Json{{"ind_plus", IndPlusGeneral(inp).str()}});
      } else {
        const SeifertData s = ParsePairs(pos);
        const std::int64_t closed = IndPlusSeifertQhs(s);
        o.Emit(Json{{"d", DInvariant(s)},
                    {"K", KCoefficients(s)},
                    {"ind_plus", closed},
                    {"aps", IndPlusGeneral(SeifertIndexInputs(s)).str()}});
      }
    } else if (tau->parsed()) {
      if (pos.empty()) Fail(Errc::kParseError, "usage: tau-bound lens a b | seifert a,b ... | denom k");
      const std::string mode = pos[0];
      const std::vector<std::string> rest(pos.begin() + 1, pos.end());
      Rational value;
      if (mode == "lens") {
        RequireArity(rest, 2, "tau-bound lens a b");
        value = TauLowerLens(LensSpace(ParseInt(rest[0]), ParseInt(rest[1]))).value();
      } else if (mode == "seifert") {
        value = TauLowerSeifert(ParsePairs(rest)).value();
      } else if (mode == "denom") {
        RequireArity(rest, 1, "tau-bound denom k");
        value = TauLowerFromDenominator(ParseInt(rest[0])).value();
      } else {
        Fail(Errc::kParseError, "unknown tau-bound mode '" + mode + "'");
      }
      o.Emit(Json{{"tau_lower", value.str()}});
    } else if (ce->parsed()) {
      const CeProblem p = CeProblemFromJson(ParseJson(ReadSource(problem_path)));
      const std::vector<IntVector> classes = EnumerateCe(p);
      bool nonzero = false;
      for (std::int64_t v : p.e) nonzero = nonzero || v != 0;
      Json j{{"count", classes.size()}, {"classes", classes}};
      if (nonzero) j["orthogonal_split"] = DetectOrthogonalSplit(p.form, p.e);
      o.Emit(j);
    } else if (plumbing->parsed()) {
      RequireArity(pos, 2, "plumbing a b");
      const HJExpansion h = HjExpand(ParseInt(pos[0]), ParseInt(pos[1]));
      const GramForm g = PlumbingGram(h);
      o.Emit(Json{{"terms", h.terms},
                  {"form", GramToJson(g)},
                  {"determinant", g.Determinant().str()},
                  {"negative_definite", IsNegativeDefinite(g)}});
    } else if (check_fs->parsed()) {
      if (!fs_problem.empty()) {
        if (!pos.empty()) Fail(Errc::kParseError, "--problem excludes Seifert pairs");
        o.Emit(SolveProblem(ParseJson(ReadSource(fs_problem))));
      } else {
        o.Emit(CheckFintushelStern(ParsePairs(pos)));
      }
    } else if (family->parsed()) {
      RequireArity(pos, 4, "check-family p q d n1,n2,...");
      const std::vector<std::int64_t> n = ParseIntList(pos[3]);
      o.Emit(CheckSfqhsFamily(ParseInt(pos[0]), ParseInt(pos[1]),
                              ParseInt(pos[2]), n, !torsion_even));
    } else if (transfer->parsed()) {
      SeifertMatrix v;
      if (!matrix_text.empty()) {
        RequireArity(pos, 2, "rho-transfer a b --seifert-matrix JSON");
        std::vector<std::vector<std::int64_t>> rows;
        try {
          rows = ParseJson(matrix_text).get<std::vector<std::vector<std::int64_t>>>();
        } catch (const Json::exception& e) {
          Fail(Errc::kParseError, e.what());
        }
        v = SeifertMatrix(std::move(rows));
      } else {
        RequireArity(pos, 3, "rho-transfer a b knot");
        if (!IsCatalogKnot(pos[2])) Fail(Errc::kParseError, "unknown knot '" + pos[2] + "'");
        v = CatalogKnot(pos[2]);
      }
      const LensSpace lens(ParseInt(pos[0]), ParseInt(pos[1]));
      o.Emit(Json{{"value", RhoTransferSurgery(lens, v).str()}});
    } else if (selftest->parsed()) {
      Json checks = Json::array();
      bool all = true;
      for (const SelftestCheck& c : RunSelftest(quick)) {
        all = all && c.ok();
        checks.push_back(Json{{"name", c.name},
                              {"cases", c.cases},
                              {"mismatches", c.mismatches},
                              {"first_mismatch", c.first_mismatch},
                              {"ok", c.ok()}});
      }
      o.Emit(Json{{"checks", checks}, {"ok", all}});
      if (!all) status = kExitInternal;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitFor(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }

  if (output_path.empty()) {
    out << o.rendered;
  } else {
    std::ofstream f(output_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << output_path << "'\n";
      return kExitBadInput;
    }
    f << o.rendered;
  }
  return status;
}

}  // namespace gaugecert
