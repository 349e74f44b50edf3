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

#include "gaugecert/obstruct.hpp"

#include <algorithm>

#include "gaugecert/error.hpp"
#include "gaugecert/index.hpp"
#include "gaugecert/lattice.hpp"
#include "gaugecert/numtheory.hpp"

namespace gaugecert {
namespace {

std::string Str(std::int64_t n) { return std::to_string(n); }

std::string ListStr(std::span<const std::int64_t> xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += Str(xs[i]);
  }
  return out + ")";
}

}  // namespace

Rational RhoTransferSurgery(const LensSpace& lens, const SeifertMatrix& v) {
  const LaurentPoly alexander = AlexanderFromSeifert(v);
  if (!NondegenerateAt(alexander, lens.a, lens.b)) {
    Fail(Errc::kDegenerate, "Alexander polynomial vanishes at zeta_" +
                                Str(lens.a) + "^" + Str(lens.b));
  }
  Rational rho = RhoLens(lens, MeridianHolonomy(lens.a, lens.b));
  try {
    rho += Rational(LtSignature(v, lens.a, lens.b));
    rho += Rational(LtSignature(v, lens.a, lens.a - lens.b));
  } catch (const Error& e) {
    if (e.code() != Errc::kSingularPivot) throw;
    Fail(Errc::kDegenerate, e.what());
  }
  return rho;
}

SeifertPair PairFromCoefficient(const Rational& c) {
  Require(!c.is_zero(), Errc::kInvalidArgument,
          "surgery coefficient must be nonzero");
  const BigInt num = c.num();
  const BigInt a = abs(num);
  const BigInt b = (num > 0) ? BigInt(-c.den()) : c.den();
  return {ToInt64(a), ToInt64(b)};
}

Rational CoefficientFromPair(const SeifertPair& p) {
  return Rational(-p.a, p.b);
}

std::optional<CsDenominatorProfile> CatalogCsProfile(const std::string& knot,
                                                     std::int64_t a,
                                                     std::int64_t b) {
  if ((knot == "figure8" || knot == "figure-8") && a == 3 && Gcd(a, b) == 1) {
    CsDenominatorProfile p;
    p.component = "figure-8 surgery, a = 3";
    p.denominators = {3, 24};
    p.source = CsSource::kUserSupplied;
    p.provenance =
        "built-in catalog: reducible flat connections agree mod Z with "
        "L(3,1) (denominator 3); the two irreducible SO(3) flat connections "
        "on 3-surgery on the figure-8 knot have Chern-Simons invariants with "
        "denominator 24 (published computation, not recomputed here)";
    return p;
  }
  return std::nullopt;
}

SeifertData SurgeryConfig::seifert_data() const {
  std::vector<SeifertPair> pairs;
  for (const Strand& s : strands) pairs.push_back({s.a, s.b});
  return SeifertData(std::move(pairs));
}

ObstructionReport CheckSurgeryConfig(const SurgeryConfig& config) {
  ObstructionReport r;
  const SeifertData s = config.seifert_data();
  bool all_unknots = true;
  std::string desc = "surgery-config";
  for (const Strand& st : config.strands) {
    desc += " " + st.knot_name + "[" +
            CoefficientFromPair({st.a, st.b}).str() + "]";
    all_unknots = all_unknots && st.is_unknot();
    Require(st.a >= 2, Errc::kInvalidArgument,
            "every strand needs a >= 2 (surgery coefficient -a/b)");
  }
  r.problem = all_unknots ? "seifert " + s.str() : desc + " " + s.str();
  Require(!config.strands.empty(), Errc::kEmptyBoundary, "no strands");

  const std::int64_t d = DInvariant(s);
  const std::int64_t a = s.ProductA();
  r.Add("d", "a·Σ bᵢ/aᵢ = 1", d, d == 1);
  r.Add("H₁(X;ℤ/2) = 0", "at most one aᵢ even", CheckH1Z2(s), CheckH1Z2(s));

  bool nondegenerate = true;
  for (std::size_t i = 0; i < config.strands.size(); ++i) {
    const Strand& st = config.strands[i];
    const bool ok =
        NondegenerateAt(AlexanderFromSeifert(st.seifert), st.a, st.b);
    nondegenerate = nondegenerate && ok;
    r.Add("α" + Str(static_cast<std::int64_t>(i + 1)) + " non-degenerate (" +
              st.knot_name + ")",
          "Δ_K(exp(2πi·" + Str(st.b) + "/" + Str(st.a) + ")) ≠ 0", ok, ok);
  }

  const Rational p1(d, a);
  r.Add("p₁", "p₁ = -e·e = d/a", p1, p1.sign() > 0);

  if (nondegenerate) {
    IndexInputs inp;
    inp.p1 = p1;
    inp.b_plus = 0;
    for (std::size_t i = 0; i < config.strands.size(); ++i) {
      const Strand& st = config.strands[i];
      const LensSpace lens(st.a, -st.b);
      const Rational rho = RhoTransferSurgery(lens, st.seifert);
      inp.boundary.push_back({1, rho, false});
      r.Add("ρ(Y" + Str(static_cast<std::int64_t>(i + 1)) + ",α" +
                Str(static_cast<std::int64_t>(i + 1)) + ")",
            "ρ(" + lens.str() + ", ℓ=" + Str(MeridianHolonomy(lens.a, lens.b)) +
                ") + Levine-Tristram corrections",
            rho, true);
      if (lens.given_b != lens.b) {
        r.provenance.push_back("strand " + Str(static_cast<std::int64_t>(i + 1)) +
                               ": boundary lens L(" + Str(lens.a) + "," +
                               Str(lens.given_b) + ") normalized to " +
                               lens.str());
      }
    }
    const Rational ind = IndPlusGeneral(inp);
    r.Add("Ind⁺", "2p₁ - 3(1+b⁺) + ½Σ(3 - h - ρ)", ind, ind.is_integer());
    if (all_unknots) {
      const std::int64_t closed = IndClosedForm(s);
      const Rational trig = IndTrigForm(s);
      r.Add("R", "2n - 3 - 2ΣKᵢ", closed, Rational(closed) == ind);
      r.Add("Ind⁺ (trigonometric form)",
            "2d/a - 3 + n + Σ(2/aᵢ)Σ cot·cot·sin²", trig, trig == ind);
    }
    r.Add("Ind⁺ ≥ 0", "index hypothesis", ind.sign() >= 0, ind.sign() >= 0);
    r.Add("Ind⁺ > 0", "Fintushel-Stern positivity", ind.sign() > 0,
          ind.sign() > 0);
  }

  std::vector<TauBound> bounds;
  bool tau_ok = true;
  for (std::size_t i = 0; i < config.strands.size(); ++i) {
    const Strand& st = config.strands[i];
    const std::string name =
        "τ(Y" + Str(static_cast<std::int64_t>(i + 1)) + ") lower bound";
    if (st.is_unknot()) {
      const LensSpace lens(st.a, -st.b);
      const TauBound b = TauLowerLens(lens);
      bounds.push_back(b);
      r.Add(name, "τ(" + lens.str() + ") ≥ 4/a", b.value(), true);
    } else if (st.cs_profile.has_value()) {
      const TauBound b = TauLowerFromProfile(*st.cs_profile);
      bounds.push_back(b);
      std::string dens;
      for (std::int64_t k : st.cs_profile->denominators) {
        dens += (dens.empty() ? "" : ",") + Str(k);
      }
      r.Add(name, "1/max denominator {" + dens + "}", b.value(), true);
      r.provenance.push_back("strand " + Str(static_cast<std::int64_t>(i + 1)) +
                             " Chern-Simons denominators {" + dens + "} (" +
                             CsSourceName(st.cs_profile->source) +
                             "): " + st.cs_profile->provenance);
    } else {
      tau_ok = false;
      r.Add(name, "no Chern-Simons denominator profile for " + st.knot_name,
            std::string("unknown"), false);
    }
  }
  if (tau_ok) {
    const TauBound hat = TauHat(bounds);
    r.Add("τ̂ lower bound", "min over boundary components", hat.value(), true);
    if (p1.sign() >= 0) {
      const Rational margin = CompactnessMargin(p1, hat);
      r.Add("τ̂ - p₁", "0 < p₁ < τ̂ ≤ 4", margin, margin.sign() > 0);
    }
  }

  if (d == 1) {
    // Homology sphere boundary: H²(X) is span(e) ⊕ W with e·e = -1/a.
    const GramForm form(RatMatrix{{Rational(-1, a)}});
    const IntVector e{1};
    const bool split = DetectOrthogonalSplit(form, e);
    r.Add("H² = span(e) ⊕ W", "orthogonal splitting", split, split);
    const std::size_t count = EnumerateCe({form, e, {}}).size();
    r.Add("|C(e)|", "reducible count odd (contradicts even count)",
          static_cast<std::int64_t>(count), count % 2 == 1);
  }
  r.Conclude(Conclusion::kObstructedPositiveDefinite);
  return r;
}

ObstructionReport CheckFintushelStern(const SeifertData& s) {
  SurgeryConfig config;
  for (const SeifertPair& p : s.pairs()) {
    Strand st;
    st.a = p.a;
    st.b = p.b;
    config.strands.push_back(st);
  }
  return CheckSurgeryConfig(config);
}

ObstructionReport CheckSfqhsFamily(std::int64_t p, std::int64_t q,
                                   std::int64_t d,
                                   std::span<const std::int64_t> n_list,
                                   bool torsion_odd,
                                   const std::string& torsion_provenance) {
  ObstructionReport r;
  r.problem = "sfqhs-family p=" + Str(p) + " q=" + Str(q) + " d=" + Str(d) +
              " n=" + ListStr(n_list);

  const bool positive_odd =
      p > 0 && q > 0 && d > 0 && p % 2 && q % 2 && d % 2;
  r.Add("p, q, d positive odd", "", positive_odd, positive_odd);
  const bool coprime = Gcd(p, q) == 1 && Gcd(p, d) == 1 && Gcd(q, d) == 1;
  r.Add("p, q, d pairwise coprime", "", coprime, coprime);
  r.Add("family non-empty", "", !n_list.empty(), !n_list.empty());

  bool even = true, increasing = true, n_coprime = true;
  for (std::size_t k = 0; k < n_list.size(); ++k) {
    even = even && n_list[k] % 2 == 0;
    n_coprime = n_coprime && Gcd(d, n_list[k]) == 1;
    if (k) increasing = increasing && n_list[k] > n_list[k - 1];
  }
  r.Add("nₖ even", "", even, even);
  r.Add("nₖ strictly increasing", "", increasing, increasing);
  r.Add("gcd(d, nₖ) = 1", "", n_coprime, n_coprime);
  if (!positive_odd || n_list.empty()) {
    r.Conclude(Conclusion::kLinearlyIndependentFamily);
    return r;
  }

  const Rational pq(CheckedMul(p, q));
  bool growth = true;
  for (std::size_t k = 0; k < n_list.size(); ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      const Rational rhs = Rational(d) * Rational(n_list[i]) -
                           Rational(d) * Rational(d - 1) / pq;
      growth = growth && Rational(n_list[k]) > rhs;
    }
  }
  r.Add("nₖ > d·nᵢ - d(d-1)/pq for k > i", "", growth, growth);
  const Rational dpq = Rational(d) / pq;
  const Rational mx = std::max({Rational(1) + dpq, Rational(1) + Rational(1, p),
                                Rational(1) + Rational(1, q)});
  const Rational n1_bound = dpq * mx;
  r.Add("n₁ > (d/pq)·max{1+d/pq, 1+1/p, 1+1/q}", n1_bound.str(),
        Rational(n_list[0]), Rational(n_list[0]) > n1_bound);
  r.Add("H²(N,∂N) has only odd torsion", "supplied flag", torsion_odd,
        torsion_odd);
  r.provenance.push_back(
      "odd torsion of H²(N,∂N) is a homological input" +
      (torsion_provenance.empty() ? std::string()
                                  : ": " + torsion_provenance));
  r.provenance.push_back(
      "the negative definite caps glued along the lens spaces exist by "
      "plumbing; they are not computed");

  for (std::size_t idx = 1; idx <= n_list.size(); ++idx) {
    const std::string tag = "[N=" + Str(static_cast<std::int64_t>(idx)) + "] ";
    const std::int64_t n = n_list[idx - 1];
    try {
      const SeifertData s = TorusKnotSurgery({p, q, d, n});
      const std::int64_t dd = DInvariant(s);
      r.Add(tag + "S_N", "S(0;(p,r),(q,s),(pqn-d,n)), ps+rq=-1", s.str(),
            dd == d);
      const std::int64_t ind = IndPlusSeifertQhs(s);
      r.Add(tag + "Ind⁺", "2n - 3 - 2ΣKᵢ (checked against trigonometric form)",
            ind, ind == 1);
      const Rational ind_aps = IndPlusGeneral(SeifertIndexInputs(s));
      r.Add(tag + "Ind⁺ (APS)", "2p₁ - 3 + ½Σ(2 - ρᵢ)", ind_aps,
            ind_aps == Rational(1));
      const std::int64_t m = CheckedAdd(CheckedMul(p * q, n), -d);
      const std::int64_t a = CheckedMul(p * q, m);
      const Rational p1(d, a);
      r.Add(tag + "p₁", "d/(pq(pqn_N-d))", p1,
            p1 == Rational(d, s.ProductA()));
      bool below = p1 < Rational(1, d) && p1 < Rational(1, p) &&
                   p1 < Rational(1, q);
      r.Add(tag + "p₁ < 1/d, 1/p, 1/q", "", below, below);
      bool below_prev = true;
      for (std::size_t i = 0; i + 1 < idx; ++i) {
        const std::int64_t ai =
            CheckedMul(p * q, CheckedAdd(CheckedMul(p * q, n_list[i]), -d));
        below_prev = below_prev && p1 < Rational(1, ai);
      }
      r.Add(tag + "p₁ < 1/(pq(pqnᵢ-d)) for i < N", "", below_prev, below_prev);
      const std::vector<TauBound> bounds =
          SfqhsTauBounds(p, q, d, n_list, idx);
      const TauBound hat = TauHat(bounds);
      r.Add(tag + "τ̂ lower bound",
            "min{1/p, 1/q, 1/(pq(pqnᵢ-d)), 1/d, 1/(pqn_N-d)}", hat.value(),
            true);
      const Rational margin = CompactnessMargin(p1, hat);
      r.Add(tag + "τ̂ - p₁", "0 < p₁ < τ̂ ≤ 4", margin, margin.sign() > 0);
      r.Add(tag + "a > d²", "a = pq(pqn_N-d)", a, a > d * d);
      if (torsion_odd && coprime && a > d * d) {
        const ReducibleVerdict v =
            SfqhsReducibleCount(p, q, d, n, torsion_odd);
        const bool odd = v.outcome == ReducibleOutcome::kOdd;
        std::string value = Str(static_cast<std::int64_t>(v.solutions.size())) +
                            " solution(s)";
        if (odd) value += ", witness k=1, ℓ₂=0, ℓ₃=0";
        r.Add(tag + "|C(e)| odd", "d² = ℓ₃a + (dk + aℓ₂)²", value, odd);
      } else {
        r.Add(tag + "|C(e)| odd", "d² = ℓ₃a + (dk + aℓ₂)²",
              std::string("not evaluated: hypotheses failed"), false);
      }
    } catch (const Error& e) {
      if (IsInternalError(e.code())) throw;
      r.Add(tag + "surgery data", "torus knot surgery preconditions",
            std::string(e.what()), false);
    }
  }
  r.Conclude(Conclusion::kLinearlyIndependentFamily);
  return r;
}

}  // namespace gaugecert
