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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "gaugecert/cstau.hpp"
#include "gaugecert/error.hpp"
#include "gaugecert/float_oracle.hpp"
#include "gaugecert/index.hpp"
#include "gaugecert/knots.hpp"
#include "gaugecert/lattice.hpp"
#include "gaugecert/lens.hpp"
#include "gaugecert/numtheory.hpp"
#include "gaugecert/obstruct.hpp"
#include "gaugecert/seifert.hpp"
#include "oracles.hpp"

namespace gc = gaugecert;
using gc::Rational;

namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

gc::SeifertData FromCrt(const std::vector<std::int64_t>& m, std::int64_t t) {
  const auto b = gc::CrtSolve(m, t);
  std::vector<gc::SeifertPair> pairs;
  for (std::size_t i = 0; i < m.size(); ++i) pairs.push_back({m[i], b[i]});
  return gc::SeifertData(pairs);
}

std::int64_t OracleClosed(const gc::SeifertData& s) {
  std::int64_t sum = 0;
  for (const auto& p : s.pairs()) sum += gc::oracle::KOf(p.a, p.b);
  return 2 * static_cast<std::int64_t>(s.size()) - 3 - 2 * sum;
}

// 1. NZ identity for all coprime 1 <= c < a <= 200 via the field route.
Outcome Criterion1() {
  Outcome o;
  const auto start = Clock::now();
  std::int64_t pairs = 0;
  for (std::int64_t a = 2; a <= 200; ++a) {
    for (std::int64_t c = 1; c < a; ++c) {
      if (gc::oracle::Gcd(a, c) != 1) continue;
      ++pairs;
      if (gc::NzSum(a, c, gc::SumRoute::kField) != gc::NzClosedForm(a, c)) {
        o.Fail("mismatch at a=" + std::to_string(a) + " c=" + std::to_string(c));
      }
    }
  }
  const double t = Seconds(start);
  if (t >= 60.0) o.Fail("runtime " + std::to_string(t) + " s >= 60 s");
  if (o.pass) {
    o.detail = std::to_string(pairs) + " pairs exact, " + std::to_string(t) + " s";
  }
  return o;
}

// 2. Closed form against trigonometric form on the triple grid and on every
// valid torus knot surgery.
Outcome Criterion2() {
  Outcome o;
  std::int64_t triples = 0, surgeries = 0;
  auto check = [&](const gc::SeifertData& s) {
    const std::int64_t closed = gc::IndClosedForm(s);
    if (gc::IndTrigForm(s) != Rational(closed) || closed != OracleClosed(s)) {
      o.Fail("disagreement on " + s.str());
    }
  };
  for (std::int64_t a1 = 2; a1 <= 12; ++a1) {
    for (std::int64_t a2 = a1 + 1; a1 * a2 <= 1000; ++a2) {
      for (std::int64_t a3 = a2 + 1; a1 * a2 * a3 <= 2000; ++a3) {
        if (gc::oracle::Gcd(a1, a2) != 1 || gc::oracle::Gcd(a1, a3) != 1 ||
            gc::oracle::Gcd(a2, a3) != 1)
          continue;
        const std::int64_t a = a1 * a2 * a3;
        for (std::int64_t t : {1, 3, 7, 11, -1, -5}) {
          if (gc::oracle::Gcd(t, a) != 1) continue;
          check(FromCrt({a1, a2, a3}, t));
          ++triples;
        }
      }
    }
  }
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::int64_t q : {2, 3, 5, 7}) {
      if (gc::oracle::Gcd(p, q) != 1) continue;
      for (std::int64_t d : {1, 3, 7, 11}) {
        for (std::int64_t n = 1; n <= 20; ++n) {
          if (gc::oracle::Gcd(n, d) != 1 || p * q * n - d <= n) continue;
          check(gc::TorusKnotSurgery({p, q, d, n}));
          ++surgeries;
        }
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(triples) + " grid triples, " +
               std::to_string(surgeries) + " torus knot surgeries";
  }
  return o;
}

// 3. R values and the positive family.
Outcome Criterion3() {
  Outcome o;
  const gc::SeifertData s235 = FromCrt({2, 3, 5}, 1);
  const gc::SeifertData s2311 = FromCrt({2, 3, 11}, 1);
  const gc::SeifertData s237 = FromCrt({2, 3, 7}, 1);
  if (gc::RInvariant(s235) != 1) o.Fail("R(2,3,5) != 1");
  if (gc::RInvariant(s2311) != 1) o.Fail("R(2,3,11) != 1");
  if (gc::RInvariant(s237) != -1) o.Fail("R(2,3,7) != -1");
  if (OracleClosed(s237) != -1) o.Fail("oracle R(2,3,7) != -1");
  std::int64_t family = 0;
  for (std::int64_t p = 2; p <= 7; ++p) {
    for (std::int64_t q = p + 1; q <= 7; ++q) {
      if (gc::oracle::Gcd(p, q) != 1) continue;
      for (std::int64_t k = 1; k <= 10; ++k) {
        const std::int64_t c = p * q * k - 1;
        if (c < 2) continue;
        const gc::SeifertData s = FromCrt({p, q, c}, 1);
        const std::int64_t r = gc::RInvariant(s);
        if (r <= 0 || r != OracleClosed(s)) o.Fail("R <= 0 on " + s.str());
        ++family;
      }
    }
  }
  if (o.pass) {
    o.detail = "R(2,3,5)=1 R(2,3,11)=1 R(2,3,7)=-1, " + std::to_string(family) +
               " family members positive";
  }
  return o;
}

// 4. SFQHS family end to end.
Outcome Criterion4() {
  Outcome o;
  const auto start = Clock::now();
  const std::vector<std::int64_t> n{6, 48, 342, 2400};
  const gc::ObstructionReport r = gc::CheckSfqhsFamily(3, 5, 7, n);
  if (r.conclusion != gc::Conclusion::kLinearlyIndependentFamily) {
    o.Fail("conclusion " + std::string(gc::ConclusionName(r.conclusion)));
  }
  for (std::size_t i = 1; i <= n.size(); ++i) {
    const std::string tag = "[N=" + std::to_string(i) + "] ";
    auto need = [&](const std::string& name) -> const gc::HypothesisLine* {
      const gc::HypothesisLine* h = r.Find(tag + name);
      if (h == nullptr) o.Fail("missing line " + tag + name);
      return h;
    };
    if (auto* h = need("Ind⁺")) {
      if (std::get<std::int64_t>(h->value) != 1) o.Fail(tag + "Ind⁺ != 1");
    }
    if (auto* h = need("p₁")) {
      if (std::get<Rational>(h->value) != Rational(7, 15 * (15 * n[i - 1] - 7))) {
        o.Fail(tag + "p₁ mismatch");
      }
    }
    for (const char* ineq : {"p₁ < 1/d, 1/p, 1/q",
                             "p₁ < 1/(pq(pqnᵢ-d)) for i < N", "τ̂ - p₁"}) {
      if (auto* h = need(ineq)) {
        if (h->verdict != gc::Verdict::kPass) o.Fail(tag + ineq + " fails");
      }
    }
  }
  const gc::ReducibleVerdict v = gc::SfqhsReducibleCount(3, 5, 7, 2400, true);
  if (v.outcome != gc::ReducibleOutcome::kOdd || v.solutions.size() != 1 ||
      !(v.solutions[0] == gc::DiophantineSolution{1, 0, 0})) {
    o.Fail("reducible count is not the unique witness k=1");
  }
  const double t = Seconds(start);
  if (t >= 10.0) o.Fail("runtime " + std::to_string(t) + " s");
  if (o.pass) {
    o.detail = "LinearlyIndependentFamily, Ind⁺=1 for N=1..4, unique witness k=1, " +
               std::to_string(t) + " s";
  }
  return o;
}

// 5. Figure-8 pipeline.
Outcome Criterion5() {
  Outcome o;
  const gc::SeifertMatrix fig8 = gc::CatalogKnot("figure8");
  for (std::int64_t a = 2; a <= 30; ++a) {
    for (std::int64_t b = 1; b < a; ++b) {
      if (gc::oracle::Gcd(a, b) != 1) continue;
      if (gc::LtSignature(fig8, a, b) != 0 ||
          gc::oracle::EigenSignature(fig8.rows(), a, b) != 0) {
        o.Fail("nonzero figure-8 signature at " + std::to_string(b) + "/" +
               std::to_string(a));
      }
    }
  }
  gc::SurgeryConfig c;
  for (const auto& [knot, coeff] :
       std::vector<std::pair<std::string, Rational>>{
           {"unknot", Rational(2)}, {"figure8", Rational(-3)},
           {"unknot", Rational(-11, 2)}}) {
    gc::Strand s;
    s.knot_name = knot;
    s.seifert = gc::CatalogKnot(knot);
    const gc::SeifertPair p = gc::PairFromCoefficient(coeff);
    s.a = p.a;
    s.b = p.b;
    if (!s.is_unknot()) s.cs_profile = gc::CatalogCsProfile(knot, p.a, p.b);
    c.strands.push_back(s);
  }
  const gc::ObstructionReport r = gc::CheckSurgeryConfig(c);
  const gc::HypothesisLine* ind = r.Find("Ind⁺");
  const gc::HypothesisLine* margin = r.Find("τ̂ - p₁");
  const Rational expect_margin = Rational(1, 24) - Rational(1, 66);
  if (ind == nullptr || std::get<Rational>(ind->value) != Rational(1)) {
    o.Fail("Ind⁺ != 1");
  }
  if (margin == nullptr || std::get<Rational>(margin->value) != expect_margin ||
      expect_margin.sign() <= 0) {
    o.Fail("compactness margin is not 1/24 - 1/66");
  }
  if (gc::RhoTransferSurgery(gc::LensSpace(3, 2), fig8) != Rational(-2, 3)) {
    o.Fail("rho transfer differs from the lens value");
  }
  if (r.conclusion != gc::Conclusion::kObstructedPositiveDefinite) {
    o.Fail("conclusion " + std::string(gc::ConclusionName(r.conclusion)));
  }
  if (o.pass) {
    o.detail = "signatures zero, Ind⁺=1, margin " + expect_margin.str() +
               ", ObstructedPositiveDefinite";
  }
  return o;
}

// 6. C(e) enumeration against brute force.
Outcome Criterion6() {
  Outcome o;
  std::mt19937_64 rng(20261015);
  const int instances = 150;
  for (int i = 0; i < instances; ++i) {
    const gc::CeProblem p = gc::oracle::RandomCeProblem(rng);
    if (gc::EnumerateCe(p) != gc::oracle::NaiveCe(p)) {
      o.Fail("mismatch on random instance " + std::to_string(i));
    }
  }
  std::uniform_int_distribution<std::int64_t> sq(1, 6), entry(-1, 1), rank(0, 3);
  int splits = 0;
  for (int i = 0; i < 100; ++i) {
    const std::int64_t s = sq(rng);
    const std::size_t w = static_cast<std::size_t>(rank(rng));
    gc::RatMatrix g(w + 1, std::vector<Rational>(w + 1));
    g[0][0] = Rational(-1, s);
    for (std::size_t r = 1; r <= w; ++r) {
      g[r][r] = Rational(-2 - static_cast<std::int64_t>(w));
      for (std::size_t c = r + 1; c <= w; ++c) g[r][c] = g[c][r] = entry(rng);
    }
    gc::IntVector e(w + 1, 0);
    e[0] = 1;
    const gc::GramForm form(g);
    if (!gc::DetectOrthogonalSplit(form, e)) {
      o.Fail("split not detected");
      continue;
    }
    ++splits;
    if (gc::EnumerateCe({form, e, {}}).size() != 1) o.Fail("split instance not a singleton");
  }
  const std::vector<std::int64_t> diag{-1, -9};
  const gc::CeProblem d{gc::GramForm::Diagonal(diag), {3, 1}, {}};
  const auto classes = gc::EnumerateCe(d);
  if (classes.size() != 2 || classes != gc::oracle::NaiveCe(d)) {
    o.Fail("diag(-1,-9), e=(3,1) gives " + std::to_string(classes.size()) + " classes");
  }
  if (o.pass) {
    o.detail = std::to_string(instances) + " random instances, " +
               std::to_string(splits) + " split singletons, diag example 2 classes";
  }
  return o;
}

// 7. Plumbing forms for a <= 500.
Outcome Criterion7() {
  Outcome o;
  std::int64_t forms = 0;
  for (std::int64_t a = 2; a <= 500; ++a) {
    for (std::int64_t b = 1; b < a; ++b) {
      if (gc::oracle::Gcd(a, b) != 1) continue;
      const gc::GramForm g = gc::PlumbingGram(gc::HjExpand(a, b));
      if (!gc::IsNegativeDefinite(g) || g.Determinant().abs() != Rational(a)) {
        o.Fail("bad plumbing form for L(" + std::to_string(a) + "," +
               std::to_string(b) + ")");
      }
      ++forms;
    }
  }
  if (o.pass) o.detail = std::to_string(forms) + " forms negative definite, |det| = a";
  return o;
}

// 8. Exact rho against the 128-bit float oracle within 2^-64.
Outcome Criterion8() {
  Outcome o;
  std::int64_t cases = 0;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::int64_t a = 2; a <= 60; ++a) {
    const gc::FloatOracle oracle(a, 128);
    for (std::int64_t b = 1; b < a; ++b) {
      if (gc::oracle::Gcd(a, b) != 1) continue;
      const gc::LensSpace lens(a, b);
      for (std::int64_t l = 0; l < a; ++l) {
        const Rational rho = gc::RhoLens(lens, l);
        const double dist = oracle.Log2Distance(b, l, rho);
        worst = std::max(worst, dist);
        if (!(dist <= -64.0)) {
          o.Fail("a=" + std::to_string(a) + " b=" + std::to_string(b) +
                 " l=" + std::to_string(l) + " distance 2^" + std::to_string(dist));
        }
        ++cases;
      }
    }
  }
  if (o.pass) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", worst);
    o.detail = std::to_string(cases) + " cases, worst distance 2^" + buf;
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"NZ identity, a <= 200", Criterion1},
      {"index closed form vs trigonometric form", Criterion2},
      {"R values", Criterion3},
      {"SFQHS family end to end", Criterion4},
      {"figure-8 surgery pipeline", Criterion5},
      {"C(e) enumeration", Criterion6},
      {"plumbing forms, a <= 500", Criterion7},
      {"float oracle agreement, a <= 60", Criterion8},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::printf("criterion %zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
