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

/*
 * Discriminants with respect to z and the quasi-ordinary test.
 *
 * The discriminant is the raw resultant Res_z(f, df/dz), i.e. the Sylvester
 * determinant, with no sign or leading-coefficient normalization.  When the
 * characteristic lowers the degree of df/dz the matrix uses its true degree;
 * df/dz = 0 gives 0.
 */
#pragma once

#include "teissier/kappa.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace teissier {

template <class Ring>
using PolyMatrix = std::vector<std::vector<Poly<Ring>>>;

/// d/d(var) of f.
template <class Ring>
Poly<Ring> derivative(const Poly<Ring>& f, std::size_t var) {
  Poly<Ring> out = f.zero_like();
  for (const auto& [m, c] : f.terms()) {
    const std::uint32_t k = m[var];
    if (k == 0) continue;
    Monomial dm = m;
    dm.set(var, k - 1);
    out.add_term(dm, f.ring().mul(c, f.ring().from_int(static_cast<long long>(k))));
  }
  return out;
}

/// Sylvester matrix of f and g as polynomials in `var`.
template <class Ring>
PolyMatrix<Ring> sylvester_matrix(const Poly<Ring>& f, const Poly<Ring>& g, std::size_t var) {
  const std::uint32_t m = f.degree_in(var), n = g.degree_in(var);
  const std::size_t size = m + n;
  const Poly<Ring> zero(f.ring(), f.nx());
  PolyMatrix<Ring> s(size, std::vector<Poly<Ring>>(size, zero));
  for (std::uint32_t row = 0; row < n; ++row)
    for (std::uint32_t k = 0; k <= m; ++k) s[row][row + m - k] = f.coefficient_in(var, k);
  for (std::uint32_t row = 0; row < m; ++row)
    for (std::uint32_t k = 0; k <= n; ++k) s[n + row][row + n - k] = g.coefficient_in(var, k);
  return s;
}

namespace detail {

template <class Ring>
Poly<Ring> cofactor_determinant(const PolyMatrix<Ring>& a, const Poly<Ring>& zero) {
  const std::size_t n = a.size();
  if (n == 0) return Poly<Ring>::constant(zero.ring(), zero.nx(), zero.ring().one());
  if (n == 1) return a[0][0];
  Poly<Ring> det = zero;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    PolyMatrix<Ring> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly<Ring>> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    Poly<Ring> t = a[0][j] * cofactor_determinant(minor, zero);
    if (j % 2) det -= t;
    else det += t;
  }
  return det;
}

// Fraction-free Bareiss elimination; every division is exact.
template <class Ring>
Poly<Ring> bareiss_determinant(PolyMatrix<Ring> a, const Poly<Ring>& zero) {
  const std::size_t n = a.size();
  Poly<Ring> prev = Poly<Ring>::constant(zero.ring(), zero.nx(), zero.ring().one());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return zero;
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_divide(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = zero;
    }
    prev = a[k][k];
  }
  Poly<Ring> det = n ? a[n - 1][n - 1] : Poly<Ring>::constant(zero.ring(), zero.nx(), zero.ring().one());
  return negate ? -det : det;
}

}  // namespace detail

inline constexpr std::size_t kCofactorLimit = 6;

template <class Ring>
Poly<Ring> determinant(const PolyMatrix<Ring>& a, const Poly<Ring>& zero) {
  if (a.size() <= kCofactorLimit) return detail::cofactor_determinant(a, zero);
  return detail::bareiss_determinant(a, zero);
}

/// Res_var(f, g) via the Sylvester determinant.  A zero argument gives 0.
template <class Ring>
Poly<Ring> resultant(const Poly<Ring>& f, const Poly<Ring>& g, std::size_t var) {
  const Poly<Ring> zero(f.ring(), f.nx());
  if (f.is_zero() || g.is_zero()) return zero;
  return determinant(sylvester_matrix(f, g, var), zero);
}

enum class UnitTest { yes, no, inconclusive };

struct MonomialUnit {
  UnitTest verdict = UnitTest::no;
  std::vector<std::uint32_t> exponent;  // A, when verdict is yes
};

/// g = x^A * (unit) iff the componentwise minimum A of the support is itself
/// a term.  Truncated input never gets a definite answer.
template <class Ring>
MonomialUnit is_monomial_times_unit(const Poly<Ring>& g, bool exact) {
  for (const auto& [m, c] : g.terms())
    if (m.has_aux(g.nx())) throw ConfigError("monomial test needs a polynomial in x only");
  if (g.is_zero()) return {exact ? UnitTest::no : UnitTest::inconclusive, {}};
  std::vector<std::uint32_t> a(g.nx(), ~std::uint32_t{0});
  for (const auto& [m, c] : g.terms())
    for (std::size_t i = 0; i < g.nx(); ++i) a[i] = std::min(a[i], m[i]);
  const bool present = !g.ring().is_zero(g.coeff(Monomial(a)));
  if (!exact) return {UnitTest::inconclusive, {}};
  if (!present) return {UnitTest::no, {}};
  return {UnitTest::yes, a};
}

struct DiscriminantReport {
  Poly<Field> disc;
  bool exact = true;
  MonomialUnit monomial_unit;
};

inline DiscriminantReport discriminant_z(const WeierstrassPoly& f, Truncation cut = std::nullopt) {
  const Poly<Field> g = f.poly.truncated(cut);
  const std::size_t z = g.nx();
  Poly<Field> disc = resultant(g, derivative(g, z), z);
  DiscriminantReport out{disc, disc.exact() && g.exact(), {}};
  out.monomial_unit = is_monomial_times_unit(out.disc, out.exact);
  return out;
}

inline std::string format_monomial_unit(const MonomialUnit& mu) {
  switch (mu.verdict) {
    case UnitTest::no: return "NO";
    case UnitTest::inconclusive: return "INCONCLUSIVE";
    case UnitTest::yes: break;
  }
  std::string out = "YES(";
  if (mu.exponent.size() != 1) out += "(";
  for (std::size_t i = 0; i < mu.exponent.size(); ++i) out += (i ? "," : "") + std::to_string(mu.exponent[i]);
  if (mu.exponent.size() != 1) out += ")";
  return out + ")";
}

enum class Verdict { yes, no, inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct ClassificationReport {
  KappaResult kappa;
  DiscriminantReport discriminant;
  Verdict teissier = Verdict::inconclusive;
  Verdict quasi_ordinary = Verdict::inconclusive;

  bool decided() const { return teissier != Verdict::inconclusive && quasi_ordinary != Verdict::inconclusive; }
};

inline ClassificationReport classify(const WeierstrassPoly& f, const KappaConfig& cfg = {}) {
  ClassificationReport r{compute_kappa(f, cfg), discriminant_z(f), Verdict::inconclusive, Verdict::inconclusive};
  switch (r.kappa.kappa.terminal) {
    case Terminal::infinity: r.teissier = Verdict::yes; break;
    case Terminal::minus_one: r.teissier = Verdict::no; break;
    case Terminal::inconclusive: break;
  }
  switch (r.discriminant.monomial_unit.verdict) {
    case UnitTest::yes: r.quasi_ordinary = Verdict::yes; break;
    case UnitTest::no: r.quasi_ordinary = Verdict::no; break;
    case UnitTest::inconclusive: break;
  }
  return r;
}

}  // namespace teissier
