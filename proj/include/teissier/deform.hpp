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
 * Integer lifts of GF(p) presentations.
 *
 * Relations are lifted in head form: u_j - (w^n - lift(c)*t + lift(h)), with
 * lift the representative in {0, ..., p-1}.  The final equation is lifted
 * term by term.  Eliminating the u's over Z then shows the monomials whose
 * coefficients vanish mod p (ghosts), and weighted initial forms compare the
 * two fibers.
 */
#pragma once

#include "teissier/kappa.hpp"

#include <optional>
#include <string>
#include <vector>

namespace teissier {

using IntPoly = Poly<Integers>;

struct IntegerLift {
  std::uint32_t p = 0;
  std::vector<Relation<Integers>> relations;
  IntPoly final_equation;
  WeightMap weights;

  std::size_t nx() const { return final_equation.nx(); }

  /// u_j - rhs_j for every relation, then the final equation.
  std::vector<IntPoly> generators() const {
    std::vector<IntPoly> out;
    for (const auto& r : relations) out.push_back(r.generator());
    out.push_back(final_equation);
    return out;
  }
};

inline IntPoly lift_poly(const Poly<Field>& f) {
  const Field& field = f.ring();
  return map_coefficients(f, Integers{}, [&](const Coeff& c) { return lift_coeff(field, c); });
}

inline Poly<Field> reduce_poly(const IntPoly& f, const Field& gf_p) {
  return map_coefficients(f, gf_p, [&](const IntCoeff& c) { return reduce_coeff(c, gf_p); });
}

inline IntegerLift lift_presentation(const OverweightPresentation& pres) {
  const Field& field = pres.field();
  if (field.is_rational() || field.degree() > 1) lift_coeff(field, field.zero());  // throws UnsupportedLift
  IntegerLift out{field.characteristic(), {}, lift_poly(pres.final_equation), pres.weights};
  for (const auto& r : pres.relations) {
    BinomialHead<Integers> head{r.head.main_var, r.head.n, lift_coeff(field, r.head.c), r.head.tail};
    IntPoly rhs = head.to_poly(Integers{}, pres.nx()) + lift_poly(r.tail_terms());
    out.relations.push_back({r.var, std::move(rhs), head});
  }
  return out;
}

/// Substitutes every relation into the final equation, highest u first.
/// No truncation: the lift is polynomial.
inline IntPoly eliminate_to_hypersurface(const IntegerLift& lift) {
  return back_substitute(lift.final_equation, lift.relations, std::nullopt);
}

struct Ghost {
  Monomial monomial;
  IntCoeff coeff;
};

struct GhostReport {
  std::vector<Ghost> ghosts;  // in print order
  IntPoly hypersurface;
};

inline GhostReport ghost_monomials(const IntegerLift& lift) {
  GhostReport out{{}, eliminate_to_hypersurface(lift)};
  for (const Monomial& m : print_order(out.hypersurface)) {
    const IntCoeff c = out.hypersurface.coeff(m);
    if (c != 0 && c % lift.p == 0) out.ghosts.push_back({m, c});
  }
  return out;
}

/// Positive rational weights, one per variable x1..xd, z, u1, ...
struct WeightVectorOmega {
  std::vector<Rational> omega;

  explicit WeightVectorOmega(std::vector<Rational> w) : omega(std::move(w)) {
    for (const auto& c : omega)
      if (c <= 0) throw ConfigError("weight components must be positive");
  }

  Rational weight(const Monomial& m) const {
    if (m.size() > omega.size()) throw ConfigError("weight vector too short for " + std::to_string(m.size()) + " variables");
    Rational w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) w += omega[i] * m[i];
    return w;
  }
};

/// omega_x = lambda, omega of an auxiliary variable = <lambda, its weight>.
inline WeightVectorOmega default_tropical_weight(const WeightMap& weights, std::size_t nx, std::size_t num_aux,
                                                 const std::vector<Rational>& lambda) {
  if (lambda.size() != nx) throw ConfigError("lambda needs " + std::to_string(nx) + " components");
  for (const auto& l : lambda)
    if (l <= 0) throw ConfigError("lambda components must be positive");
  std::vector<Rational> omega = lambda;
  for (std::size_t k = 0; k < num_aux; ++k) {
    auto it = weights.find(nx + k);
    if (it == weights.end()) throw ConfigError("no weight assigned to variable " + variable_name(nx, nx + k));
    Rational dot = 0;
    for (std::size_t i = 0; i < nx; ++i) dot += lambda[i] * it->second[i];
    omega.push_back(dot);
  }
  return WeightVectorOmega(std::move(omega));
}

/// The variables of a presentation: z and one u per relation.  A u whose
/// stage ended without a vertex has no weight of its own; it gets the
/// weight of its relation head plus (1,...,1), which keeps every relation
/// overweight.
inline WeightVectorOmega default_tropical_weight(const IntegerLift& lift, const std::vector<Rational>& lambda) {
  const std::size_t nx = lift.nx();
  WeightMap weights = lift.weights;
  for (const auto& rel : lift.relations) {
    if (weights.count(rel.var)) continue;
    const QPoint head = monomial_weight(rel.head.tail, nx, weights);
    weights[rel.var] = head + QPoint{std::vector<Rational>(nx, Rational(1))};
  }
  return default_tropical_weight(weights, nx, lift.relations.size() + 1, lambda);
}

struct InitialIdealReport {
  std::vector<IntPoly> generators;
  bool fiber_independent = true;
  std::optional<IntCoeff> witness;
};

template <class Ring>
Poly<Ring> weighted_initial_form(const Poly<Ring>& f, const WeightVectorOmega& w) {
  Poly<Ring> out = f.zero_like();
  std::optional<Rational> best;
  for (const auto& [m, c] : f.terms()) {
    const Rational wm = w.weight(m);
    if (!best || wm < *best) {
      best = wm;
      out = f.zero_like();
    }
    if (wm == *best) out.add_term(m, c);
  }
  return out;
}

inline InitialIdealReport initial_forms_weighted(const IntegerLift& lift, const WeightVectorOmega& w) {
  InitialIdealReport out;
  for (const IntPoly& g : lift.generators()) {
    IntPoly in = weighted_initial_form(g, w);
    // Report each form with a positive first term.
    if (!in.is_zero() && in.coeff(print_order(in).front()) < 0) in = -in;
    for (const auto& [m, c] : in.terms()) {
      if (c % lift.p == 0 && out.fiber_independent) {
        out.fiber_independent = false;
        out.witness = c;
      }
    }
    out.generators.push_back(std::move(in));
  }
  return out;
}

}  // namespace teissier
