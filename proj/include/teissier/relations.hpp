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

// Weierstrass polynomials and the relation stack u_j = w^n - c*tail + h.
#pragma once

#include "teissier/poly.hpp"
#include "teissier/poly_io.hpp"

#include <string>
#include <vector>

namespace teissier {

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The binomial w^n - c*tail heading a relation; tail does not contain w.
template <class Ring>
struct BinomialHead {
  std::size_t main_var = 0;
  std::uint32_t n = 1;
  typename Ring::value_type c;
  Monomial tail;

  Poly<Ring> to_poly(const Ring& ring, std::size_t nx) const {
    Poly<Ring> p = Poly<Ring>::term(ring, nx, Monomial::variable(main_var, n), ring.one());
    p.add_term(tail, ring.neg(c));
    return p;
  }
};

/// u_var = rhs, where rhs = head + h and h collects the overweight terms.
template <class Ring>
struct Relation {
  std::size_t var = 0;
  Poly<Ring> rhs;
  BinomialHead<Ring> head;

  Poly<Ring> head_poly() const { return head.to_poly(rhs.ring(), rhs.nx()); }
  Poly<Ring> tail_terms() const { return rhs - head_poly(); }

  /// The generator u_var - rhs of the presentation ideal.
  Poly<Ring> generator() const { return Poly<Ring>::variable(rhs.ring(), rhs.nx(), var) - rhs; }
};

/// Rewrites f until every bounded variable is below its bound, replacing
/// w^n by u - (rhs - w^n) for each relation.  Only downward rewrites are
/// performed, so the result is unique and normal_form is idempotent.
template <class Ring>
Poly<Ring> normal_form(Poly<Ring> f, const std::vector<Relation<Ring>>& relations, Truncation cut) {
  constexpr int kMaxPasses = 4096;
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    bool changed = false;
    for (const auto& rel : relations) {
      const std::size_t w = rel.head.main_var;
      const std::uint32_t n = rel.head.n;
      if (f.degree_in(w) < n) continue;
      Poly<Ring> wn = Poly<Ring>::term(f.ring(), f.nx(), Monomial::variable(w, n), f.ring().one());
      Poly<Ring> repl = Poly<Ring>::variable(f.ring(), f.nx(), rel.var) - (rel.rhs - wn);
      f = power_substitute(f, w, n, repl, cut);
      changed = true;
    }
    if (!changed) return f;
  }
  throw Error("normal form did not converge");
}

/// Eliminates the relation variables from f: each u_j is replaced by its
/// rhs, the highest first.
template <class Ring>
Poly<Ring> back_substitute(Poly<Ring> f, const std::vector<Relation<Ring>>& relations, Truncation cut) {
  for (auto it = relations.rbegin(); it != relations.rend(); ++it) f = substitute(f, it->var, it->rhs, cut);
  return f;
}

struct WeierstrassPoly {
  Poly<Field> poly;
  std::uint32_t n = 0;
};

/// Accepts f = z^n + (terms of lower z-degree) with f(0) = 0 and no u's.
inline WeierstrassPoly weierstrass_validate(const Poly<Field>& f) {
  const std::size_t z = f.nx();
  for (const auto& [m, c] : f.terms())
    if (m.size() > z + 1) throw ValidationError("not a Weierstrass polynomial: contains auxiliary variables beyond z");
  const std::uint32_t n = f.degree_in(z);
  if (n == 0) throw ValidationError("not a Weierstrass polynomial: z-degree is 0");
  const Poly<Field> lead = f.coefficient_in(z, n);
  if (lead.size() != 1 || !lead.terms().begin()->first.is_one() ||
      !f.ring().is_one(lead.terms().begin()->second))
    throw ValidationError("not a Weierstrass polynomial: not monic in z");
  if (!f.ring().is_zero(f.coeff(Monomial()))) throw ValidationError("not a Weierstrass polynomial: f(0) != 0");
  return {f, n};
}

}  // namespace teissier
