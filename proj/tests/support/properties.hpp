/*
   Copyright 2026 The Teissier Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Randomized property suites shared by the unit tests and the acceptance run.
#pragma once

#include "oracles.hpp"

#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace teissier::props {

struct PropertyResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  bool passed(std::size_t min_cases) const { return failures == 0 && cases >= min_cases; }
};

inline QPoint random_point(std::size_t d, std::mt19937& rng, int max_num) {
  std::uniform_int_distribution<int> num(0, max_num), den(1, 8);
  QPoint p{std::vector<Rational>(d)};
  for (auto& c : p.coords) c = Rational(num(rng), den(rng));
  return p;
}

/// Exact LP membership against Fourier-Motzkin, d <= 3, |S| <= 5.
inline PropertyResult lp_membership(std::uint32_t seed, std::size_t cases) {
  std::mt19937 rng(seed);
  PropertyResult r;
  for (std::size_t t = 0; t < cases; ++t) {
    const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    std::vector<QPoint> s;
    for (std::size_t i = 0; i < m; ++i) s.push_back(random_point(d, rng, 16));
    QPoint p = random_point(d, rng, 16);
    if (rng() % 2) {
      // A convex combination of S, nudged: lands near the boundary.
      std::vector<int> w(m);
      int total = 0;
      for (auto& x : w) total += (x = std::uniform_int_distribution<int>(0, 4)(rng));
      if (total == 0) w[0] = total = 1;
      QPoint q{std::vector<Rational>(d, Rational(0))};
      for (std::size_t i = 0; i < m; ++i) q = q + scale(s[i], Rational(w[i], total));
      for (auto& c : q.coords) c += Rational(std::uniform_int_distribution<int>(-1, 1)(rng), 8);
      p = q;
    }
    const bool lp = member(p, s);
    const bool fm = oracle::fm_member(p, s);
    ++r.cases;
    if (lp != fm) r.fail("membership of " + format_point(p) + " disagrees (lp " + std::to_string(lp) + ")");
  }
  return r;
}

/// disc((z - s1)(z - s2)) = +-(s1 - s2)^2 for random s1, s2 of degree <= 4.
inline PropertyResult discriminant_of_product(std::uint32_t seed, std::size_t cases) {
  std::mt19937 rng(seed);
  PropertyResult r;
  for (std::size_t t = 0; t < cases; ++t) {
    const Field k = oracle::random_field(rng);
    const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    const Poly<Field> s1 = oracle::random_x_poly(k, d, rng, 3, 4);
    const Poly<Field> s2 = oracle::random_x_poly(k, d, rng, 3, 4);
    const Poly<Field> z = Poly<Field>::variable(k, d, d);
    const WeierstrassPoly f{(z - s1) * (z - s2), 2};
    const Poly<Field> expected = (s1 - s2) * (s1 - s2);
    const Poly<Field> disc = discriminant_z(f).disc;
    ++r.cases;
    if (!(disc == expected) && !(disc == -expected))
      r.fail("disc of " + format(f.poly) + " over " + k.name() + " is " + format(disc));
  }
  return r;
}

/// Random Weierstrass polynomials with a known binomial-power skeleton,
/// heavier perturbations and an optional translation of z.
inline WeierstrassPoly random_weierstrass(std::mt19937& rng) {
  const Field k = oracle::random_field(rng);
  const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
  const Poly<Field> z = Poly<Field>::variable(k, d, d);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  std::vector<std::uint32_t> a(d);
  do {
    for (auto& v : a) v = static_cast<std::uint32_t>(pick(0, 3));
  } while (std::accumulate(a.begin(), a.end(), 0u) == 0);

  Poly<Field> base(k, d);
  QPoint v0{std::vector<Rational>(d)};
  std::uint32_t big_n = 0;
  const int shape = pick(0, 3);
  if (shape == 3) {
    // Three-stage tower ((z^2 - a)^2 - b*z)^2 + c*(z^2 - a).
    Poly<Field> q = pow(z, 2);
    q.add_term(Monomial(a), k.neg(oracle::random_coeff(k, rng, true)));
    std::vector<std::uint32_t> b(d), c(d);
    for (std::size_t i = 0; i < d; ++i) {
      b[i] = (3 * a[i] + 1) / 2 + pick(0, 2);
      c[i] = (7 * a[i] + 1) / 2 + pick(0, 2);
    }
    ++b[0];
    ++c[0];
    Poly<Field> bz = Poly<Field>::term(k, d, Monomial(b) * Monomial::variable(d), oracle::random_coeff(k, rng, true));
    Poly<Field> level = q * q - bz;
    base = level * level + Poly<Field>::term(k, d, Monomial(c), oracle::random_coeff(k, rng, true)) * q;
    big_n = 8;
    for (std::size_t i = 0; i < d; ++i) v0.coords[i] = Rational(a[i], 2);
  } else if (shape < 2) {
    const std::uint32_t n = pick(2, 3), e = pick(1, 2);
    Poly<Field> q = pow(z, n);
    q.add_term(Monomial(a), k.neg(oracle::random_coeff(k, rng, true)));
    base = pow(q, e);
    big_n = n * e;
    for (std::size_t i = 0; i < d; ++i) v0.coords[i] = Rational(a[i], n);
  } else {
    Poly<Field> q = pow(z, 2);
    q.add_term(Monomial(a), k.neg(oracle::random_coeff(k, rng, true)));
    std::vector<std::uint32_t> b(d);
    bool tie = true;
    for (std::size_t i = 0; i < d; ++i) {
      b[i] = (3 * a[i] + 1) / 2 + pick(0, 2);
      tie = tie && Rational(b[i], 3) == Rational(a[i], 2);
    }
    if (tie) ++b[0];
    std::vector<std::uint32_t> bz = b;
    bz.push_back(1);
    base = q * q;
    base.add_term(Monomial(bz), k.neg(oracle::random_coeff(k, rng, true)));
    big_n = 4;
    for (std::size_t i = 0; i < d; ++i) v0.coords[i] = Rational(a[i], 2);
  }
  const int extra = pick(0, 2);
  for (int t = 0; t < extra; ++t) {
    const std::uint32_t kz = pick(0, static_cast<int>(big_n) - 1);
    std::vector<std::uint32_t> c(d + 1);
    bool tie = true;
    for (std::size_t i = 0; i < d; ++i) {
      const Rational bound = v0[i] * (big_n - kz);
      const BigInt ceil = (numerator(bound) + denominator(bound) - 1) / denominator(bound);
      c[i] = static_cast<std::uint32_t>(ceil) + pick(0, 2);
      tie = tie && Rational(c[i], big_n - kz) == v0[i];
    }
    if (tie) ++c[0];
    c[d] = kz;
    base.add_term(Monomial(c), oracle::random_coeff(k, rng, true));
  }
  if (pick(0, 1)) {
    const Poly<Field> r = oracle::random_x_poly(k, d, rng, 2, 3, false);
    base = substitute(base, d, z + r);
  }
  return weierstrass_validate(base);
}

struct EngineProperties {
  PropertyResult reexpansion;  // every recorded decomposition re-expands
  PropertyResult round_trip;   // presentations eliminate back to the input
  PropertyResult overweight;   // verify_overweight on every presentation
  PropertyResult descent;      // n > e_1 > ... on terminal-infinity runs
  std::size_t runs = 0;
};

inline void check_run(const WeierstrassPoly& f, const KappaConfig& cfg, EngineProperties& out) {
  ++out.runs;
  KappaResult res;
  try {
    res = compute_kappa(f, cfg);
  } catch (const Error& e) {
    out.descent.fail(format(f.poly) + ": " + e.what());
    return;
  }
  const std::size_t nx = f.poly.nx();
  for (const auto& rec : res.decompositions) {
    ++out.reexpansion.cases;
    if (!(rec.power.expand(f.poly.ring(), nx) == rec.initial))
      out.reexpansion.fail(format(f.poly) + ": decomposition of " + format(rec.initial) + " does not re-expand");
  }
  if (res.presentation) {
    ++out.round_trip.cases;
    const Poly<Field> back = presentation_round_trip(*res.presentation, cfg.truncation);
    if (!(back == f.poly.truncated(cfg.truncation)))
      out.round_trip.fail(format(f.poly) + ": round trip gives " + format(back));
    ++out.overweight.cases;
    const OverweightCheck check = verify_overweight(*res.presentation);
    if (!check.ok) out.overweight.fail(format(f.poly) + ": " + check.violations.front());
  }
  if (res.kappa.terminal == Terminal::infinity) {
    ++out.descent.cases;
    const auto& e = res.kappa.multiplicities;
    for (std::size_t i = 1; i < e.size(); ++i)
      if (e[i] >= e[i - 1]) out.descent.fail(format(f.poly) + ": multiplicities do not descend");
  }
}

/// Runs the fixtures and then random instances until every property has at
/// least min_cases cases.
inline EngineProperties engine_properties(std::uint32_t seed, std::size_t min_cases,
                                          const std::vector<WeierstrassPoly>& fixtures) {
  std::mt19937 rng(seed);
  EngineProperties out;
  const KappaConfig cfg;
  for (const auto& f : fixtures) check_run(f, cfg, out);
  const std::size_t max_runs = 50 * min_cases;
  while (out.runs < max_runs &&
         (out.reexpansion.cases < min_cases || out.round_trip.cases < min_cases ||
          out.overweight.cases < min_cases || out.descent.cases < min_cases))
    check_run(random_weierstrass(rng), cfg, out);
  return out;
}

}  // namespace teissier::props
