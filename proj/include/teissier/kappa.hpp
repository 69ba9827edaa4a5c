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
 * The kappa invariant of a Weierstrass polynomial.
 *
 * Stage i works with f_i, monic of degree e_i in its top variable w (z at
 * stage 0, then u_1, u_2, ...).  Each stage
 *
 *   1. prepares the weighted projected polyhedron: while some vertex has an
 *      initial form (w - c*t)^e_i, translate w by c*t, which removes the
 *      vertex and strictly shrinks the polyhedron;
 *   2. reads the prepared polyhedron: empty -> terminal infinity, several
 *      vertices -> terminal -1, one vertex v -> v is the next entry;
 *   3. writes In_v(f_i) = (w^n - c*t)^e with n > 1.  If e = 1 the run ends
 *      with terminal infinity; otherwise u = w^n - c*t becomes the next top
 *      variable, w gets weight v, and f_{i+1} is f_i with w^n -> u + c*t.
 *
 * Only translations of the top variable are searched, so a terminal -1 means
 * "not improvable by z/u translations".  Initial forms that only become
 * binomial powers modulo the relation stack are found by a bounded rewrite
 * search (binomialize_modulo).
 */
#pragma once

#include "teissier/polyhedron.hpp"
#include "teissier/relations.hpp"

#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace teissier {

class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal invariant of the engine fails.
class EngineError : public Error {
 public:
  using Error::Error;
};

enum class Terminal { minus_one, infinity, inconclusive };

inline std::string to_string(Terminal t) {
  switch (t) {
    case Terminal::minus_one: return "-1";
    case Terminal::infinity: return "inf";
    case Terminal::inconclusive: return "inconclusive";
  }
  return "?";
}

struct KappaConfig {
  Truncation truncation = kDefaultTruncation;
  std::size_t budget = 256;  // eliminations per stage
  unsigned depth = 3;        // rewrite depth of binomialize_modulo
};

/// (w^n - c*tail)^e.
struct BinomialPower {
  std::size_t main_var = 0;
  std::uint32_t n = 1;
  Coeff c;
  Monomial tail;
  std::uint32_t e = 1;

  BinomialHead<Field> head() const { return {main_var, n, c, tail}; }

  Poly<Field> binomial(const Field& field, std::size_t nx) const { return head().to_poly(field, nx); }
  Poly<Field> expand(const Field& field, std::size_t nx) const { return pow(binomial(field, nx), e); }
};

enum class DecomposeStatus { binomial_power, not_binomial, field_extension_required };

struct Decomposition {
  DecomposeStatus status = DecomposeStatus::not_binomial;
  std::optional<BinomialPower> power;
  unsigned needed_root_degree = 0;
};

namespace detail {

// C(e, k) as a field element.
inline Coeff binomial_coefficient(const Field& field, std::uint32_t e, std::uint32_t k) {
  BigInt c = 1;
  for (std::uint32_t i = 0; i < k; ++i) c = c * (e - i) / (i + 1);
  return field.from_int(c);
}

inline std::vector<std::uint32_t> divisors_descending(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = n; d >= 1; --d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace detail

/// Writes `in` = w^N + ... as (w^n - c*t)^e with e as large as possible.
///
/// For each divisor e of N (largest first) the w-free term must be a*t^e
/// with gcd(N/e, exponents of t) = 1.
/// With k0 the least k >= 1 such that C(e, k) != 0 in the field (a power of
/// the characteristic, or 1), gamma = -c solves gamma^k0 = a_k0 / C(e, k0),
/// where a_k0 is the coefficient of w^(n(e-k0)) t^k0; that root is unique
/// over the algebraic closure.  The candidate is accepted only if its
/// expansion reproduces `in` exactly.
inline Decomposition binomial_power_decompose(const Poly<Field>& in, std::size_t main_var) {
  const Field& field = in.ring();
  const std::size_t nx = in.nx();
  const std::uint32_t big_n = in.degree_in(main_var);
  const Poly<Field> top = in.coefficient_in(main_var, big_n);
  if (big_n == 0 || top.size() != 1 || !top.terms().begin()->first.is_one() ||
      !field.is_one(top.terms().begin()->second))
    throw ContractViolation("initial form must be monic in its main variable");

  const Poly<Field> free_part = in.coefficient_in(main_var, 0);
  if (free_part.size() != 1) return {};
  const auto& [free_mono, free_coeff] = *free_part.terms().begin();

  Decomposition blocked;
  for (const std::uint32_t e : detail::divisors_descending(big_n)) {
    const std::uint32_t n = big_n / e;
    bool divisible = true;
    for (auto v : free_mono.exponents()) divisible = divisible && v % e == 0;
    if (!divisible) continue;
    std::vector<std::uint32_t> t_exps = free_mono.exponents();
    for (auto& v : t_exps) v /= e;
    std::uint32_t g = n;
    for (auto v : t_exps) g = std::gcd(g, v);
    if (g != 1) continue;  // n must be the order of the vertex, so w^n - c*t stays primitive
    const Monomial tail(std::move(t_exps));

    std::uint32_t k0 = 1;
    while (k0 < e && field.is_zero(detail::binomial_coefficient(field, e, k0))) ++k0;
    Monomial probe = tail.pow(k0);
    probe.set(main_var, n * (e - k0));
    const Coeff a_k0 = in.coeff(probe);
    if (field.is_zero(a_k0)) continue;
    const Coeff b = field.div(a_k0, detail::binomial_coefficient(field, e, k0));
    const auto gamma = field.nth_root(b, k0);
    if (!gamma) {
      if (blocked.status == DecomposeStatus::not_binomial) {
        blocked.status = DecomposeStatus::field_extension_required;
        blocked.needed_root_degree = k0;
      }
      continue;
    }
    BinomialPower bp{main_var, n, field.neg(*gamma), tail, e};
    if (bp.expand(field, nx) == in) return {DecomposeStatus::binomial_power, bp, 0};
  }
  return blocked;
}

/// In_v(f): the monic top term plus every term whose weighted point is v.
/// No vertex check; see initial_form.
inline Poly<Field> initial_part(const Poly<Field>& f, const QPoint& v, const WeightMap& weights, std::size_t top,
                                std::uint32_t e) {
  Poly<Field> in(f.ring(), f.nx());
  for (const auto& [m, c] : f.terms()) {
    if (m == Monomial::variable(top, e)) {
      in.add_term(m, c);
      continue;
    }
    auto p = term_point(m, f.nx(), weights, top, e);
    if (p && *p == v) in.add_term(m, c);
  }
  return in;
}

inline Poly<Field> initial_form(const Poly<Field>& f, const QPoint& v, const WeightMap& weights, std::size_t top,
                                std::uint32_t e) {
  const auto poly = weighted_projected_polyhedron(f, weights, top, e);
  const auto& vs = poly.vertices();
  if (std::find(vs.begin(), vs.end(), v) == vs.end())
    throw ContractViolation(format_point(v) + " is not a vertex of the projected polyhedron");
  return initial_part(f, v, weights, top, e);
}

/// State of one stage: f monic of degree e in `top`, the weights of the
/// lower auxiliary variables, and the relation stack.  When top is u_i the
/// last relation is the one defining u_i.
struct StageState {
  Poly<Field> f;
  std::size_t top = 0;
  std::uint32_t e = 1;
  WeightMap weights;
  std::vector<Relation<Field>> relations;
};

struct Binomialized {
  Poly<Field> f;        // f rewritten modulo the relations
  Poly<Field> initial;  // its initial form at the vertex
  BinomialPower power;
  unsigned depth = 0;
};

/// Searches rewrites of f modulo the relations, up to `depth` moves, for the
/// initial form at v that is a binomial power with the largest exponent e.
/// A move picks a term a*m of the initial form and a relation
/// u_j = w_j^n - c_j*t_j + h_j with t_j | m, and replaces a*m by
/// a/c_j * (m/t_j) * (w_j^n - u_j + h_j).  Moves that would create a term
/// lighter than v are discarded.  Ties keep the shallowest rewrite.
inline std::optional<Binomialized> binomialize_modulo(const StageState& s, const QPoint& v, unsigned depth,
                                                      Truncation cut, DecomposeStatus* failure = nullptr) {
  const Field& field = s.f.ring();
  const std::size_t nx = s.f.nx();
  std::optional<Binomialized> best;
  bool extension_blocked = false;

  struct Node {
    Poly<Field> f;
    Poly<Field> in;
    unsigned depth;
  };
  std::deque<Node> queue;
  std::set<std::string> seen;
  {
    Poly<Field> in = initial_part(s.f, v, s.weights, s.top, s.e);
    seen.insert(format(in));
    queue.push_back({s.f, std::move(in), 0});
  }

  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    const Decomposition dec = binomial_power_decompose(node.in, s.top);
    if (dec.status == DecomposeStatus::binomial_power) {
      if (!best || dec.power->e > best->power.e) best = Binomialized{node.f, node.in, *dec.power, node.depth};
      if (best->power.e == s.e) break;
    } else if (dec.status == DecomposeStatus::field_extension_required) {
      extension_blocked = true;
    }
    if (node.depth >= depth) continue;

    for (auto rel = s.relations.rbegin(); rel != s.relations.rend(); ++rel) {
      const Monomial& tail = rel->head.tail;
      if (tail.is_one()) continue;
      const Coeff c_inv = field.inv(rel->head.c);
      Poly<Field> replacement = Poly<Field>::term(field, nx, Monomial::variable(rel->head.main_var, rel->head.n),
                                                  field.one());
      replacement -= Poly<Field>::variable(field, nx, rel->var);
      replacement += rel->tail_terms();
      for (const Monomial& m : print_order(node.in)) {
        if (m == Monomial::variable(s.top, s.e)) continue;
        auto rest = tail.divide_into(m);
        if (!rest) continue;
        if (rel->var == s.top && m[s.top] + 1 >= s.e) continue;
        const Coeff a = node.in.coeff(m);
        Poly<Field> added = replacement.shifted(*rest).scaled(field.mul(a, c_inv));
        bool valid = true;
        for (const auto& [am, ac] : added.terms()) {
          auto p = term_point(am, nx, s.weights, s.top, s.e);
          if (!p || !dominates(*p, v)) {
            valid = false;
            break;
          }
        }
        if (!valid) continue;
        Poly<Field> next = node.f;
        next.add_term(m, field.neg(a));
        next += added;
        next.apply_truncation(cut);
        Poly<Field> in = initial_part(next, v, s.weights, s.top, s.e);
        if (!seen.insert(format(in)).second) continue;
        queue.push_back({std::move(next), std::move(in), node.depth + 1});
      }
    }
  }
  if (!best && failure)
    *failure = extension_blocked ? DecomposeStatus::field_extension_required : DecomposeStatus::not_binomial;
  return best;
}

/// A binomial power found by the engine together with the form it decomposes.
struct DecompositionRecord {
  BinomialPower power;
  Poly<Field> initial;
};

enum class PrepareStatus { prepared, inconclusive };

struct PrepareResult {
  PrepareStatus status = PrepareStatus::prepared;
  OrthantPolyhedron polyhedron;
  std::size_t eliminations = 0;
  std::size_t shrink_checks = 0;
};

/// Eliminates solvable vertices of the weighted polyhedron of s.f by
/// translating the top variable, lex-smallest vertex first.  Updates s.f,
/// the pending relation (or z_shift at stage 0) in place.
inline PrepareResult prepare_polyhedron(StageState& s, Poly<Field>& z_shift, const KappaConfig& cfg,
                                        std::vector<DecompositionRecord>* record = nullptr) {
  PrepareResult out;
  const Field& field = s.f.ring();
  const std::size_t nx = s.f.nx();
  OrthantPolyhedron poly = weighted_projected_polyhedron(s.f, s.weights, s.top, s.e);
  for (;;) {
    std::optional<Binomialized> solvable;
    for (const QPoint& v : poly.vertices()) {
      auto bz = binomialize_modulo(s, v, cfg.depth, cfg.truncation);
      if (bz && bz->power.n == 1) {
        solvable = std::move(bz);
        break;
      }
    }
    if (!solvable) break;
    if (out.eliminations >= cfg.budget) {
      out.status = PrepareStatus::inconclusive;
      break;
    }
    if (record) record->push_back({solvable->power, solvable->initial});
    const Poly<Field> shift = Poly<Field>::term(field, nx, solvable->power.tail, solvable->power.c);
    Poly<Field> moved = Poly<Field>::variable(field, nx, s.top) + shift;
    if (s.top == nx) {
      z_shift += shift;
    } else {
      Relation<Field>& pending = s.relations.back();
      std::vector<Relation<Field>> lower(s.relations.begin(), s.relations.end() - 1);
      pending.rhs = normal_form(pending.rhs - shift, lower, cfg.truncation);
    }
    Poly<Field> next = substitute(solvable->f, s.top, moved, cfg.truncation);
    next = normal_form(std::move(next), s.relations, cfg.truncation);
    OrthantPolyhedron after = weighted_projected_polyhedron(next, s.weights, s.top, s.e);
    ++out.shrink_checks;
    if (!polyhedron_leq(after, poly) || polyhedron_leq(poly, after))
      throw EngineError("elimination did not strictly shrink the polyhedron");
    s.f = std::move(next);
    poly = std::move(after);
    ++out.eliminations;
  }
  out.polyhedron = std::move(poly);
  return out;
}

struct KappaInvariant {
  std::vector<QPoint> vertices;
  Terminal terminal = Terminal::inconclusive;
  Truncation certified_truncation;
  std::size_t budget_used = 0;
  // n = e_0 > e_1 > ... : the degree of each stage in its top variable.
  std::vector<std::uint32_t> multiplicities;
};

inline std::string format_kappa(const KappaInvariant& k) {
  std::string out = "(";
  for (const auto& v : k.vertices) out += format_point(v) + ", ";
  return out + to_string(k.terminal) + ")";
}

/// Relations u_j = w^n_j - c_j*t_j + h_j and the final equation, with the
/// weights z -> v_1, u_j -> v_(j+1).  Coordinates: z here is the original z
/// minus z_shift.
struct OverweightPresentation {
  std::vector<Relation<Field>> relations;
  Poly<Field> final_equation;
  std::optional<BinomialHead<Field>> final_head;
  WeightMap weights;
  Poly<Field> z_shift;

  std::size_t nx() const { return final_equation.nx(); }
  const Field& field() const { return final_equation.ring(); }
};

/// "w^n - c*t [+ h]" with the head kept in binomial form.
template <class Ring>
std::string format_headed(const BinomialHead<Ring>& head, const Poly<Ring>& whole) {
  const Ring& ring = whole.ring();
  const std::size_t nx = whole.nx();
  std::string out = format_monomial(Monomial::variable(head.main_var, head.n), nx);
  auto c = head.c;
  const bool neg = ring.negative(c);
  if (neg) c = ring.neg(c);
  out += neg ? " + " : " - ";
  const std::string t = format_monomial(head.tail, nx);
  if (t.empty()) out += ring.to_string(c);
  else out += (ring.is_one(c) ? "" : ring.to_string(c) + "*") + t;
  const Poly<Ring> rest = whole - head.to_poly(ring, nx);
  if (!rest.is_zero()) {
    const std::string r = format(rest);
    out += r.front() == '-' ? " - " + r.substr(1) : " + " + r;
  }
  return out;
}

template <class Ring>
std::string format_relation(const Relation<Ring>& rel) {
  return variable_name(rel.rhs.nx(), rel.var) + " - (" + format_headed(rel.head, rel.rhs) + ")";
}

/// The generators of the presentation ideal as text.
inline std::vector<std::string> format_presentation(const OverweightPresentation& p) {
  std::vector<std::string> out;
  for (const auto& r : p.relations) out.push_back(format_relation(r));
  out.push_back(format(p.final_equation));
  return out;
}

struct KappaResult {
  KappaInvariant kappa;
  std::optional<OverweightPresentation> presentation;
  std::vector<std::string> diagnostics;
  std::vector<DecompositionRecord> decompositions;  // translations and stage heads, in order
  std::vector<OrthantPolyhedron> stage_polyhedra;   // prepared polyhedron of each stage
  std::size_t shrink_checks = 0;
};

namespace detail {

// Unknown terms lie beyond x-degree `cert`, so their points have coordinate
// sum >= cert/e.  That whole region sits inside P iff P contains the points
// (cert/e) * unit_i.
inline bool polyhedron_certified(const OrthantPolyhedron& p, Truncation cert, std::uint32_t e, std::size_t d) {
  if (!cert) return true;
  if (p.empty()) return false;
  for (std::size_t i = 0; i < d; ++i) {
    QPoint corner{std::vector<Rational>(d, Rational(0))};
    corner.coords[i] = Rational(*cert, e);
    if (!p.contains(corner)) return false;
  }
  return true;
}

}  // namespace detail

inline KappaResult compute_kappa(const WeierstrassPoly& input, const KappaConfig& cfg = {}) {
  if (cfg.budget < 1) throw ConfigError("budget must be at least 1");
  if (cfg.truncation && *cfg.truncation < 1) throw ConfigError("truncation must be at least 1");
  const Field& field = input.poly.ring();
  const std::size_t nx = input.poly.nx();
  KappaResult result;
  KappaInvariant& kappa = result.kappa;
  kappa.certified_truncation = cfg.truncation;
  kappa.multiplicities.push_back(input.n);

  StageState s{input.poly.truncated(cfg.truncation), nx, input.n, {}, {}};
  Poly<Field> z_shift(field, nx);

  auto finish = [&](Terminal t) { kappa.terminal = t; };
  auto emit = [&](Poly<Field> final_eq, std::optional<BinomialHead<Field>> head) {
    result.presentation = OverweightPresentation{s.relations, std::move(final_eq), std::move(head), s.weights, z_shift};
  };

  for (;;) {
    const PrepareResult prep = prepare_polyhedron(s, z_shift, cfg, &result.decompositions);
    kappa.budget_used += prep.eliminations;
    result.shrink_checks += prep.shrink_checks;
    if (prep.status == PrepareStatus::inconclusive) {
      result.diagnostics.push_back("elimination budget exhausted at stage " + std::to_string(kappa.vertices.size()));
      finish(Terminal::inconclusive);
      break;
    }
    const OrthantPolyhedron& poly = prep.polyhedron;
    result.stage_polyhedra.push_back(poly);
    Truncation cert = s.f.truncation();
    for (const auto& r : s.relations) cert = min_truncation(cert, r.rhs.truncation());
    if (!detail::polyhedron_certified(poly, cert, s.e, nx)) {
      result.diagnostics.push_back("truncation " + std::to_string(*cert) + " exhausted at stage " +
                                   std::to_string(kappa.vertices.size()));
      finish(Terminal::inconclusive);
      break;
    }
    if (poly.empty()) {
      emit(s.f, std::nullopt);
      finish(Terminal::infinity);
      break;
    }
    if (poly.vertices().size() > 1) {
      result.diagnostics.push_back("prepared polyhedron has " + std::to_string(poly.vertices().size()) +
                                   " vertices; terminal -1 is translation-minimal");
      finish(Terminal::minus_one);
      break;
    }
    const QPoint v = poly.vertices().front();
    DecomposeStatus failure = DecomposeStatus::not_binomial;
    auto bz = binomialize_modulo(s, v, cfg.depth, cfg.truncation, &failure);
    if (!bz) {
      result.diagnostics.push_back(failure == DecomposeStatus::field_extension_required
                                       ? "initial form needs a root outside " + field.name()
                                       : "initial form not a binomial power; input may be reducible");
      finish(Terminal::minus_one);
      break;
    }
    const BinomialPower bp = bz->power;
    if (bp.n == 1) throw EngineError("solvable vertex survived preparation");
    if (!(bp.expand(field, nx) == bz->initial)) throw EngineError("binomial power does not re-expand");
    if (bp.e >= s.e) throw EngineError("stage multiplicities do not descend");
    result.decompositions.push_back({bp, bz->initial});
    kappa.vertices.push_back(v);
    kappa.multiplicities.push_back(bp.e);
    s.weights[s.top] = v;

    if (bp.e == 1) {
      emit(bz->f, bp.head());
      finish(Terminal::infinity);
      break;
    }

    const std::size_t u = s.top == nx ? nx + 1 : s.top + 1;
    Relation<Field> rel{u, bp.binomial(field, nx), bp.head()};
    s.relations.push_back(rel);
    Poly<Field> repl = Poly<Field>::variable(field, nx, u);
    repl.add_term(bp.tail, bp.c);
    Poly<Field> next = power_substitute(bz->f, s.top, bp.n, repl, cfg.truncation);
    next = normal_form(std::move(next), s.relations, cfg.truncation);
    const Poly<Field> lead = next.coefficient_in(u, bp.e);
    if (next.degree_in(u) != bp.e || lead.size() != 1 || !lead.terms().begin()->first.is_one() ||
        !field.is_one(lead.terms().begin()->second))
      throw EngineError("next stage polynomial is not monic in " + variable_name(nx, u));
    s.f = std::move(next);
    s.top = u;
    s.e = bp.e;
  }
  return result;
}

struct OverweightCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Both head terms of every relation (and of the final equation) weigh
/// n*weight(w); every other term is strictly heavier in the product order.
inline OverweightCheck verify_overweight(const OverweightPresentation& p) {
  OverweightCheck out;
  const std::size_t nx = p.nx();
  auto check = [&](const std::string& label, const BinomialHead<Field>& head, const Poly<Field>& whole) {
    const QPoint wn = scale(monomial_weight(Monomial::variable(head.main_var), nx, p.weights), Rational(head.n));
    const QPoint tw = monomial_weight(head.tail, nx, p.weights);
    if (!(tw == wn)) {
      out.ok = false;
      out.violations.push_back(label + ": head terms have weights " + format_point(wn) + " and " + format_point(tw));
    }
    const Poly<Field> rest = whole - head.to_poly(whole.ring(), nx);
    for (const auto& [m, c] : rest.terms()) {
      const QPoint w = monomial_weight(m, nx, p.weights);
      if (!strictly_heavier(w, wn)) {
        out.ok = false;
        out.violations.push_back(label + ": term " + format_monomial(m, nx) + " has weight " + format_point(w) +
                                 ", not above " + format_point(wn));
      }
    }
  };
  for (const auto& r : p.relations) check(variable_name(nx, r.var), r.head, r.rhs);
  if (p.final_head) check("final equation", *p.final_head, p.final_equation);
  return out;
}

/// Eliminates the u's and undoes the z translation; reproduces the input up
/// to the truncation.
inline Poly<Field> presentation_round_trip(const OverweightPresentation& p, Truncation cut) {
  Poly<Field> f = back_substitute(p.final_equation, p.relations, cut);
  const std::size_t z = p.nx();
  Poly<Field> back = Poly<Field>::variable(p.field(), p.nx(), z) - p.z_shift;
  return substitute(f, z, back, cut);
}

}  // namespace teissier
