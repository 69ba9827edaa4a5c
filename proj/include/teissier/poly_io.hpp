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
 * Text form of polynomials.
 *
 *   expr   := ['-'] term (('+'|'-') term)*
 *   term   := coeff ('*' factor)* | factor ('*' factor)*
 *   factor := var ['^' nat]
 *   var    := 'x'nat | 'z' | 'u'nat
 *   coeff  := int | int '/' nat | '[' int (',' int)* ']'
 *
 * The bracket form writes an element of GF(p^k) by its coefficient vector
 * over GF(p) (low degree first).  Whitespace is ignored; '*' is mandatory.
 *
 * Canonical printing puts terms with the highest auxiliary variable powers
 * first (u's from the top down, then z), and orders the x-part by ascending
 * total degree, ties broken lexicographically with x1 first.
 */
#pragma once

#include "teissier/poly.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace teissier {

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at position " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct AuxVar {
  std::string name;
  std::optional<std::uint32_t> bound;
  std::optional<std::vector<Rational>> weight;
};

/// Variables in scope: x1..xd followed by the auxiliary tower z, u1, u2, ...
struct VarContext {
  std::size_t d = 0;
  std::vector<AuxVar> aux;

  static VarContext standard(std::size_t d, std::size_t num_u = 0) {
    VarContext ctx;
    ctx.d = d;
    ctx.aux.push_back({"z", std::nullopt, std::nullopt});
    for (std::size_t j = 1; j <= num_u; ++j) ctx.aux.push_back({"u" + std::to_string(j), std::nullopt, std::nullopt});
    return ctx;
  }

  std::size_t z_index() const { return d; }
  std::size_t u_index(std::size_t j) const { return d + j; }
  std::size_t num_vars() const { return d + aux.size(); }

  void validate() const {
    for (std::size_t i = 0; i < aux.size(); ++i) {
      for (std::size_t j = i + 1; j < aux.size(); ++j)
        if (aux[i].name == aux[j].name) throw ConfigError("duplicate variable name " + aux[i].name);
      if (aux[i].bound && *aux[i].bound < 1) throw ConfigError("degree bound must be at least 1");
      if (aux[i].weight && aux[i].weight->size() != d) throw ConfigError("weight vector has wrong dimension");
    }
  }
};

inline std::string variable_name(std::size_t nx, std::size_t index) {
  if (index < nx) return "x" + std::to_string(index + 1);
  if (index == nx) return "z";
  return "u" + std::to_string(index - nx);
}

/// True when term a prints before term b.
inline bool print_before(const Monomial& a, const Monomial& b, std::size_t nx) {
  const std::size_t top = std::max(a.size(), b.size());
  for (std::size_t i = top; i-- > nx;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  const auto da = a.x_degree(nx), db = b.x_degree(nx);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < nx; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

inline std::string format_monomial(const Monomial& m, std::size_t nx) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += variable_name(nx, i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

template <class Ring>
std::vector<Monomial> print_order(const Poly<Ring>& f) {
  std::vector<Monomial> ms;
  ms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) ms.push_back(m);
  std::sort(ms.begin(), ms.end(),
            [&](const Monomial& a, const Monomial& b) { return print_before(a, b, f.nx()); });
  return ms;
}

/// Canonical text of f; parse(format(f)) == f.
template <class Ring>
std::string format(const Poly<Ring>& f) {
  if (f.is_zero()) return "0";
  const auto& ring = f.ring();
  std::string out;
  bool first = true;
  for (const Monomial& m : print_order(f)) {
    auto c = f.coeff(m);
    const bool neg = ring.negative(c);
    if (neg) c = ring.neg(c);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const std::string mono = format_monomial(m, f.nx());
    if (mono.empty()) {
      out += ring.to_string(c);
    } else {
      if (!ring.is_one(c)) out += ring.to_string(c) + "*";
      out += mono;
    }
  }
  return out;
}

template <class Ring>
class PolyParser {
 public:
  PolyParser(Ring ring, const VarContext& ctx, std::string_view text)
      : ring_(std::move(ring)), ctx_(ctx), text_(text) {}

  Poly<Ring> parse() {
    Poly<Ring> out(ring_, ctx_.d);
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    add_signed(out, parse_term(), negate);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+', '-' or end of input");
      ++pos_;
      add_signed(out, parse_term(), op == '-');
    }
    return out;
  }

 private:
  using C = typename Ring::value_type;

  struct Term {
    C coeff;
    Monomial mono;
  };

  void add_signed(Poly<Ring>& out, const Term& t, bool negate) {
    out.add_term(t.mono, negate ? ring_.neg(t.coeff) : t.coeff);
  }

  Term parse_term() {
    skip_ws();
    Term t{ring_.one(), Monomial()};
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '[') {
      t.coeff = parse_coeff();
    } else {
      t.mono = t.mono * parse_factor();
    }
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      skip_ws();
      t.mono = t.mono * parse_factor();
    }
    skip_ws();
    if (!at_end() && peek() != '+' && peek() != '-') fail("unexpected character '" + std::string(1, peek()) + "'");
    return t;
  }

  C parse_coeff() {
    if (peek() == '[') return parse_digit_vector();
    const std::size_t start = pos_;
    const BigInt num = parse_nat();
    skip_ws();
    if (peek() != '/') return ring_.from_int(num);
    ++pos_;
    skip_ws();
    const std::size_t den_pos = pos_;
    const BigInt den = parse_nat();
    const C d = ring_.from_int(den);
    if (ring_.is_zero(d)) fail_at(den_pos, "denominator has no inverse in " + ring_.name());
    try {
      return ring_.div(ring_.from_int(num), d);
    } catch (const ArithmeticError& e) {
      fail_at(start, e.what());
    }
    return ring_.zero();
  }

  C parse_digit_vector() {
    const std::size_t start = pos_;
    ++pos_;
    std::vector<std::uint32_t> digits;
    for (;;) {
      skip_ws();
      const BigInt v = parse_nat();
      if constexpr (requires(const Ring& r) { r.from_digits(digits); }) {
        if (ring_.is_rational()) fail_at(start, "digit vectors need a finite field");
        digits.push_back(static_cast<std::uint32_t>(v % ring_.characteristic()));
      } else {
        fail_at(start, "digit vectors need a finite field");
      }
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ']') {
        ++pos_;
        break;
      }
      fail("expected ',' or ']'");
    }
    if constexpr (requires(const Ring& r) { r.from_digits(digits); }) {
      try {
        return ring_.from_digits(digits);
      } catch (const FieldError& e) {
        fail_at(start, e.what());
      }
    }
    return ring_.zero();
  }

  Monomial parse_factor() {
    const std::size_t start = pos_;
    if (at_end()) fail("expected a variable");
    const char c = peek();
    std::size_t index = 0;
    if (c == 'z') {
      ++pos_;
      index = ctx_.z_index();
    } else if (c == 'x' || c == 'u') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail_at(start, "unknown variable");
      const BigInt n = parse_nat();
      if (c == 'x') {
        if (n < 1 || n > ctx_.d) fail_at(start, "unknown variable x" + n.str());
        index = static_cast<std::size_t>(n) - 1;
      } else {
        if (n < 1 || n >= ctx_.aux.size()) fail_at(start, "unknown variable u" + n.str());
        index = ctx_.u_index(static_cast<std::size_t>(n));
      }
    } else {
      fail_at(start, "unknown variable '" + std::string(1, c) + "'");
    }
    if (index >= ctx_.num_vars()) fail_at(start, "unknown variable");
    skip_ws();
    std::uint32_t power = 1;
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t epos = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail_at(epos, "malformed exponent");
      const BigInt e = parse_nat();
      if (e > 1000000) fail_at(epos, "exponent too large");
      power = static_cast<std::uint32_t>(e);
    }
    return Monomial::variable(index, power);
  }

  BigInt parse_nat() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    BigInt n = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      n = n * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return n;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const { throw ParseError(at, what); }

  Ring ring_;
  const VarContext& ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class Ring>
Poly<Ring> parse_polynomial(std::string_view text, const VarContext& ctx, Ring ring) {
  return PolyParser<Ring>(std::move(ring), ctx, text).parse();
}

}  // namespace teissier
