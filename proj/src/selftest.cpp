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

#include "gaugecert/selftest.hpp"

#include <algorithm>
#include <random>

#include "gaugecert/error.hpp"
#include "gaugecert/index.hpp"
#include "gaugecert/lattice.hpp"
#include "gaugecert/lens.hpp"
#include "gaugecert/numtheory.hpp"
#include "gaugecert/seifert.hpp"

namespace gaugecert {
namespace {

SelftestCheck NzGrid(std::int64_t max_a) {
  SelftestCheck c;
  c.name = "nz-identity";
  for (std::int64_t a = 2; a <= max_a; ++a) {
    for (std::int64_t k = 1; k < a; ++k) {
      if (Gcd(a, k) != 1) continue;
      ++c.cases;
      const Rational closed = NzClosedForm(a, k);
      if (NzSum(a, k, SumRoute::kField) != closed ||
          NzSum(a, k, SumRoute::kTrace) != closed) {
        if (c.mismatches++ == 0) {
          c.first_mismatch = "a=" + std::to_string(a) + " c=" + std::to_string(k);
        }
      }
    }
  }
  return c;
}

SelftestCheck IndexGrid(std::int64_t max_n) {
  SelftestCheck c;
  c.name = "index-formula-agreement";
  const std::int64_t ps[] = {2, 3, 5, 7};
  const std::int64_t ds[] = {1, 3, 7, 11};
  for (std::int64_t p : ps) {
    for (std::int64_t q : ps) {
      if (q == p || Gcd(p, q) != 1) continue;
      for (std::int64_t d : ds) {
        for (std::int64_t n = 1; n <= max_n; ++n) {
          if (Gcd(n, d) != 1 || p * q * n - d <= n) continue;
          ++c.cases;
          const SeifertData s = TorusKnotSurgery({p, q, d, n});
          const bool ok = Rational(IndClosedForm(s)) == IndTrigForm(s) &&
                          IndPlusGeneral(SeifertIndexInputs(s)) ==
                              Rational(IndClosedForm(s));
          if (!ok && c.mismatches++ == 0) c.first_mismatch = s.str();
        }
      }
    }
  }
  return c;
}

std::int64_t ISqrtFloor(const Rational& x) {
  // Largest m >= 0 with m^2 <= x.
  BigInt m = sqrt(x.floor());
  return ToInt64(m);
}

// Exhaustive box search; the box comes from |x_i|^2 <= N (Q^-1)_ii.
std::vector<IntVector> NaiveCe(const CeProblem& p) {
  const std::size_t n = p.form.rank();
  RatMatrix q = p.form.gram();
  for (auto& row : q) {
    for (Rational& x : row) x = -x;
  }
  // Gauss-Jordan inverse.
  RatMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (q[piv][k].is_zero()) ++piv;
    std::swap(q[piv], q[k]);
    std::swap(inv[piv], inv[k]);
    const Rational f = q[k][k].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      q[k][j] *= f;
      inv[k][j] *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || q[i][k].is_zero()) continue;
      const Rational g = q[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        q[i][j] -= g * q[k][j];
        inv[i][j] -= g * inv[k][j];
      }
    }
  }
  const Rational target = p.form.Pair(p.e, p.e);
  std::vector<std::int64_t> box(n);
  for (std::size_t i = 0; i < n; ++i) box[i] = ISqrtFloor(-target * inv[i][i]);
  std::vector<IntVector> out;
  IntVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -box[i];
  while (true) {
    bool keep = p.form.Pair(x, x) == target;
    for (std::size_t i = 0; keep && i < n; ++i) keep = Mod(x[i] - p.e[i], 2) == 0;
    for (const Restriction& r : p.restrictions) {
      if (!keep) break;
      std::int64_t v = 0, w = 0;
      for (std::size_t i = 0; i < n; ++i) {
        v += r.row[i] * x[i];
        w += r.row[i] * p.e[i];
      }
      keep = Mod(v - w, r.modulus) == 0 || Mod(v + w, r.modulus) == 0;
    }
    if (keep) {
      IntVector y = x;
      const auto first = std::find_if(y.begin(), y.end(),
                                       [](std::int64_t v) { return v != 0; });
      if (first != y.end() && *first < 0) {
        for (std::int64_t& v : y) v = -v;
      }
      out.push_back(y);
    }
    std::size_t i = 0;
    while (i < n && x[i] == box[i]) {
      x[i] = -box[i];
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SelftestCheck CeGrid(int instances) {
  SelftestCheck c;
  c.name = "c-e-brute-force";
  std::mt19937_64 rng(20260915);
  std::uniform_int_distribution<int> rank_dist(1, 3), entry(-2, 2);
  for (int t = 0; t < instances; ++t) {
    const std::size_t n = static_cast<std::size_t>(rank_dist(rng));
    // -(M^T M + I) is negative definite.
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
    for (auto& row : m) {
      for (auto& v : row) v = entry(rng);
    }
    RatMatrix g(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t s = (i == j) ? 1 : 0;
        for (std::size_t k = 0; k < n; ++k) s += m[k][i] * m[k][j];
        g[i][j] = Rational(-s);
      }
    }
    CeProblem p{GramForm(std::move(g)), IntVector(n), {}};
    for (auto& v : p.e) v = entry(rng);
    if (std::all_of(p.e.begin(), p.e.end(), [](std::int64_t v) { return v == 0; })) {
      p.e[0] = 1;
    }
    ++c.cases;
    if (EnumerateCe(p) != NaiveCe(p) && c.mismatches++ == 0) {
      c.first_mismatch = "instance " + std::to_string(t);
    }
  }
  return c;
}

}  // namespace

std::vector<SelftestCheck> RunSelftest(bool quick) {
  return {NzGrid(quick ? 40 : 200), IndexGrid(quick ? 6 : 20),
          CeGrid(quick ? 30 : 120)};
}

}  // namespace gaugecert
