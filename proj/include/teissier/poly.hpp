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
 * Sparse multivariate polynomials in x1..xd, z, u1, u2, ... over a
 * coefficient ring, doubling as x-adically truncated power series.
 *
 * A polynomial may carry a truncation certificate T: every term of total
 * x-degree >= T is unknown and is not stored.  A polynomial without a
 * certificate is exact.  Operations that take a truncation argument drop
 * terms at or above it and only then record the certificate, so exact
 * inputs whose results fit stay exact.
 */
#pragma once

#include "teissier/monomial.hpp"
#include "teissier/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace teissier {

using Truncation = std::optional<std::uint32_t>;

inline Truncation min_truncation(Truncation a, Truncation b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

inline constexpr std::uint32_t kDefaultTruncation = 64;

template <class Ring>
class Poly {
 public:
  using ring_type = Ring;
  using coeff_type = typename Ring::value_type;
  using TermMap = std::map<Monomial, coeff_type>;

  Poly(Ring ring, std::size_t nx) : ring_(std::move(ring)), nx_(nx) {}

  static Poly constant(Ring ring, std::size_t nx, const coeff_type& c) {
    Poly p(std::move(ring), nx);
    p.add_term(Monomial(), c);
    return p;
  }

  static Poly term(Ring ring, std::size_t nx, const Monomial& m, const coeff_type& c) {
    Poly p(std::move(ring), nx);
    p.add_term(m, c);
    return p;
  }

  static Poly variable(Ring ring, std::size_t nx, std::size_t index) {
    const auto one = ring.one();
    return term(std::move(ring), nx, Monomial::variable(index), one);
  }

  const Ring& ring() const { return ring_; }
  std::size_t nx() const { return nx_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Truncation truncation() const { return cert_; }
  bool exact() const { return !cert_.has_value(); }

  Poly zero_like() const {
    Poly p(ring_, nx_);
    p.cert_ = cert_;
    return p;
  }

  /// Adds c*m, dropping the term if it lies beyond the certificate.
  void add_term(const Monomial& m, const coeff_type& c) {
    if (ring_.is_zero(c)) return;
    if (cert_ && m.x_degree(nx_) >= *cert_) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second = ring_.add(it->second, c);
    if (ring_.is_zero(it->second)) terms_.erase(it);
  }

  coeff_type coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  std::uint32_t degree_in(std::size_t index) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[index]);
    return d;
  }

  /// Coefficient of var^k, as a polynomial in the remaining variables.
  Poly coefficient_in(std::size_t index, std::uint32_t k) const {
    Poly out = zero_like();
    for (const auto& [m, c] : terms_)
      if (m[index] == k) out.terms_.emplace(m.without(index), c);
    return out;
  }

  /// Largest variable index occurring, or nullopt for constants.
  std::optional<std::size_t> max_variable() const {
    std::optional<std::size_t> r;
    for (const auto& [m, c] : terms_)
      if (!m.is_one()) r = std::max(r.value_or(0), m.size() - 1);
    return r;
  }

  /// Drops every term of x-degree >= cut; records `cut` as the certificate
  /// when something was dropped.
  void apply_truncation(Truncation cut) {
    cut = min_truncation(cut, cert_);
    if (!cut) return;
    bool dropped = false;
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->first.x_degree(nx_) >= *cut) {
        it = terms_.erase(it);
        dropped = true;
      } else {
        ++it;
      }
    }
    if (dropped) cert_ = min_truncation(cert_, cut);
  }

  Poly truncated(Truncation cut) const {
    Poly p = *this;
    p.apply_truncation(cut);
    return p;
  }

  /// Marks the polynomial as known only below x-degree t.
  void set_truncation(Truncation t) {
    cert_ = t;
    apply_truncation(t);
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& [m, c] : p.terms_) c = ring_.neg(c);
    return p;
  }

  Poly& operator+=(const Poly& o) {
    cert_ = min_truncation(cert_, o.cert_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    apply_truncation(cert_);
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    cert_ = min_truncation(cert_, o.cert_);
    for (const auto& [m, c] : o.terms_) add_term(m, ring_.neg(c));
    apply_truncation(cert_);
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  Poly scaled(const coeff_type& s) const {
    Poly p = zero_like();
    for (const auto& [m, c] : terms_) p.add_term(m, ring_.mul(c, s));
    return p;
  }

  Poly shifted(const Monomial& s) const {
    Poly p = zero_like();
    for (const auto& [m, c] : terms_) p.add_term(m * s, c);
    return p;
  }

  /// Equality of the known terms; certificates are metadata.
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  Ring ring_;
  std::size_t nx_;
  TermMap terms_;
  Truncation cert_;
};

template <class Ring>
Poly<Ring> mul(const Poly<Ring>& a, const Poly<Ring>& b, Truncation cut = std::nullopt) {
  Poly<Ring> out(a.ring(), a.nx());
  const Truncation known = min_truncation(a.truncation(), b.truncation());
  const Truncation bound = min_truncation(cut, known);
  const auto& ring = a.ring();
  bool dropped = false;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma * mb;
      if (bound && m.x_degree(a.nx()) >= *bound) {
        dropped = true;
        continue;
      }
      out.add_term(m, ring.mul(ca, cb));
    }
  }
  Truncation cert = known;
  if (dropped) cert = min_truncation(cert, bound);
  out.set_truncation(cert);
  return out;
}

template <class Ring>
Poly<Ring> operator*(const Poly<Ring>& a, const Poly<Ring>& b) {
  return mul(a, b);
}

template <class Ring>
Poly<Ring> pow(const Poly<Ring>& a, std::uint32_t k, Truncation cut = std::nullopt) {
  Poly<Ring> result = Poly<Ring>::constant(a.ring(), a.nx(), a.ring().one());
  result.set_truncation(a.truncation());
  Poly<Ring> base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base, cut);
    k >>= 1U;
    if (k > 0) base = mul(base, base, cut);
  }
  return result;
}

/// f with variable `index` replaced by `replacement`, expanded and cut at
/// x-degree `cut`.
template <class Ring>
Poly<Ring> substitute(const Poly<Ring>& f, std::size_t index, const Poly<Ring>& replacement,
                      Truncation cut = std::nullopt) {
  std::map<std::uint32_t, Poly<Ring>> by_power;
  for (const auto& [m, c] : f.terms()) {
    auto [it, inserted] = by_power.try_emplace(m[index], f.zero_like());
    it->second.add_term(m.without(index), c);
  }
  Poly<Ring> out = f.zero_like();
  out.apply_truncation(cut);
  Poly<Ring> power = Poly<Ring>::constant(f.ring(), f.nx(), f.ring().one());
  std::uint32_t at = 0;
  for (const auto& [e, coeff] : by_power) {
    while (at < e) {
      power = mul(power, replacement, cut);
      ++at;
    }
    out += mul(coeff, power, cut);
  }
  out.apply_truncation(cut);
  return out;
}

/// Rewrites every power var^e as var^(e mod k) * replacement^(e div k).
template <class Ring>
Poly<Ring> power_substitute(const Poly<Ring>& f, std::size_t index, std::uint32_t k,
                            const Poly<Ring>& replacement, Truncation cut = std::nullopt) {
  if (k == 0) throw ArithmeticError("power_substitute needs k >= 1");
  std::map<std::uint32_t, Poly<Ring>> by_quotient;
  for (const auto& [m, c] : f.terms()) {
    const std::uint32_t e = m[index];
    Monomial rest = m;
    rest.set(index, e % k);
    auto [it, inserted] = by_quotient.try_emplace(e / k, f.zero_like());
    it->second.add_term(rest, c);
  }
  Poly<Ring> out = f.zero_like();
  out.apply_truncation(cut);
  Poly<Ring> power = Poly<Ring>::constant(f.ring(), f.nx(), f.ring().one());
  std::uint32_t at = 0;
  for (const auto& [q, coeff] : by_quotient) {
    while (at < q) {
      power = mul(power, replacement, cut);
      ++at;
    }
    out += mul(coeff, power, cut);
  }
  out.apply_truncation(cut);
  return out;
}

/// Coefficient-wise image of f in another ring.
template <class To, class From, class Fn>
Poly<To> map_coefficients(const Poly<From>& f, To ring, Fn&& fn) {
  Poly<To> out(std::move(ring), f.nx());
  out.set_truncation(f.truncation());
  for (const auto& [m, c] : f.terms()) out.add_term(m, fn(c));
  return out;
}

/// Exact division a / b over a field, by leading terms in lex order.
/// Throws ArithmeticError when b does not divide a.
template <class Ring>
Poly<Ring> exact_divide(Poly<Ring> a, const Poly<Ring>& b) {
  if (b.is_zero()) throw ArithmeticError("division by the zero polynomial");
  Poly<Ring> q(a.ring(), a.nx());
  const auto& [lb_m, lb_c] = *b.terms().rbegin();
  while (!a.is_zero()) {
    const auto [la_m, la_c] = *a.terms().rbegin();
    auto quot = lb_m.divide_into(la_m);
    if (!quot) throw ArithmeticError("polynomial division is not exact");
    const auto c = a.ring().div(la_c, lb_c);
    q.add_term(*quot, c);
    a -= b.shifted(*quot).scaled(c);
  }
  return q;
}

}  // namespace teissier
