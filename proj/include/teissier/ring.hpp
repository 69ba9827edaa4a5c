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
 * Exact coefficient rings: the rationals, prime fields GF(p), their small
 * extensions GF(p^k), and the integers.  Values are plain data; all
 * arithmetic goes through a ring handle (Field or Integers) so that
 * polynomials can be written once against either ring.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace teissier {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntCoeff = BigInt;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldError : public Error {
 public:
  using Error::Error;
};

class UnsupportedLift : public Error {
 public:
  using Error::Error;
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Upper bound on p^k for the finite fields; root extraction is exhaustive.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct FieldSpec {
  std::uint32_t characteristic = 0;
  unsigned extension_degree = 1;
  // Monic modulus over GF(p), coefficients low to high (size k+1); empty
  // unless extension_degree > 1.
  std::vector<std::uint32_t> modulus;
};

// A field element.  Rationals are kept in lowest terms by cpp_rational;
// finite-field elements are encoded as the base-p integer of their
// coefficient vector, so GF(p) elements are just residues 0..p-1.
using Coeff = std::variant<Rational, std::uint32_t>;

namespace detail {

using Digits = std::vector<std::uint32_t>;

inline void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
inline Digits poly_mod(Digits a, const Digits& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

// True if the monic polynomial m (degree >= 1) has no monic factor of degree
// 1..deg/2.  Exhaustive trial division; the fields are small.
inline bool is_irreducible(const Digits& m, std::uint32_t p) {
  const std::size_t k = m.size() - 1;
  for (std::size_t deg = 1; deg <= k / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Digits f(deg + 1, 0);
      std::uint64_t r = idx;
      for (std::size_t i = 0; i < deg; ++i) {
        f[i] = static_cast<std::uint32_t>(r % p);
        r /= p;
      }
      f[deg] = 1;
      if (poly_mod(m, f, p).empty()) return false;
    }
  }
  return true;
}

struct FieldData {
  FieldSpec spec;
  std::uint64_t order = 0;  // 0 for Q
};

}  // namespace detail

/// Handle to an immutable coefficient field: Q, GF(p) or GF(p^k).
class Field {
 public:
  using value_type = Coeff;

  static Field rationals() {
    auto data = std::make_shared<detail::FieldData>();
    return Field(std::move(data));
  }

  static Field prime(std::uint32_t p) {
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (p > kMaxFieldOrder) throw FieldError("field order exceeds the supported bound");
    auto data = std::make_shared<detail::FieldData>();
    data->spec.characteristic = p;
    data->order = p;
    return Field(std::move(data));
  }

  /// GF(p^k) = GF(p)[a]/(modulus).  The modulus is given low-to-high and must
  /// be monic of degree k and irreducible.
  static Field extension(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus) {
    if (k == 1 && modulus.empty()) return prime(p);
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw FieldError("extension degree must be positive");
    for (auto& c : modulus) c %= p;
    detail::trim(modulus);
    if (modulus.size() != k + 1 || modulus.back() != 1)
      throw FieldError("modulus must be monic of degree " + std::to_string(k));
    std::uint64_t order = 1;
    for (unsigned i = 0; i < k; ++i) {
      order *= p;
      if (order > kMaxFieldOrder) throw FieldError("field order exceeds the supported bound");
    }
    if (!detail::is_irreducible(modulus, p)) throw FieldError("modulus is reducible over GF(p)");
    auto data = std::make_shared<detail::FieldData>();
    data->spec.characteristic = p;
    data->spec.extension_degree = k;
    data->spec.modulus = std::move(modulus);
    data->order = order;
    return Field(std::move(data));
  }

  const FieldSpec& spec() const { return data_->spec; }
  std::uint32_t characteristic() const { return data_->spec.characteristic; }
  unsigned degree() const { return data_->spec.extension_degree; }
  std::uint64_t order() const { return data_->order; }
  bool is_rational() const { return characteristic() == 0; }

  Coeff zero() const { return is_rational() ? Coeff{Rational(0)} : Coeff{std::uint32_t{0}}; }
  Coeff one() const { return is_rational() ? Coeff{Rational(1)} : Coeff{std::uint32_t{1}}; }

  Coeff from_int(const BigInt& n) const {
    if (is_rational()) return Rational(n);
    BigInt r = n % characteristic();
    if (r < 0) r += characteristic();
    return static_cast<std::uint32_t>(r);
  }

  Coeff from_int(long long n) const { return from_int(BigInt(n)); }

  /// The element a_0 + a_1 a + ... of GF(p^k) (digits reduced mod p).
  Coeff from_digits(std::vector<std::uint32_t> digits) const {
    if (is_rational()) throw FieldError("digit vectors only denote finite-field elements");
    const std::uint32_t p = characteristic();
    for (auto& c : digits) c %= p;
    if (degree() > 1) digits = detail::poly_mod(std::move(digits), spec().modulus, p);
    else detail::trim(digits);
    if (digits.size() > degree()) throw FieldError("digit vector too long for GF(p)");
    return encode(digits);
  }

  std::vector<std::uint32_t> digits(const Coeff& a) const {
    detail::Digits out(degree(), 0);
    std::uint64_t r = std::get<std::uint32_t>(a);
    for (unsigned i = 0; i < degree(); ++i) {
      out[i] = static_cast<std::uint32_t>(r % characteristic());
      r /= characteristic();
    }
    return out;
  }

  /// Element number `index` in the enumeration order 0..q-1.
  Coeff element(std::uint64_t index) const { return static_cast<std::uint32_t>(index); }

  bool is_zero(const Coeff& a) const {
    if (is_rational()) return std::get<Rational>(a) == 0;
    return std::get<std::uint32_t>(a) == 0;
  }
  bool is_one(const Coeff& a) const { return a == one(); }
  bool negative(const Coeff& a) const { return is_rational() && std::get<Rational>(a) < 0; }

  Coeff add(const Coeff& a, const Coeff& b) const {
    if (is_rational()) return Rational(std::get<Rational>(a) + std::get<Rational>(b));
    if (degree() == 1) {
      const std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(a)} + std::get<std::uint32_t>(b);
      return static_cast<std::uint32_t>(s % characteristic());
    }
    auto x = digits(a);
    const auto y = digits(b);
    for (unsigned i = 0; i < degree(); ++i) x[i] = (x[i] + y[i]) % characteristic();
    return encode(x);
  }

  Coeff neg(const Coeff& a) const {
    if (is_rational()) return Rational(-std::get<Rational>(a));
    auto x = digits(a);
    for (auto& c : x) c = (characteristic() - c) % characteristic();
    return encode(x);
  }

  Coeff sub(const Coeff& a, const Coeff& b) const { return add(a, neg(b)); }

  Coeff mul(const Coeff& a, const Coeff& b) const {
    if (is_rational()) return Rational(std::get<Rational>(a) * std::get<Rational>(b));
    const std::uint64_t p = characteristic();
    if (degree() == 1) {
      return static_cast<std::uint32_t>(std::uint64_t{std::get<std::uint32_t>(a)} *
                                        std::get<std::uint32_t>(b) % p);
    }
    const auto x = digits(a);
    const auto y = digits(b);
    detail::Digits prod(2 * degree() - 1, 0);
    for (unsigned i = 0; i < degree(); ++i)
      for (unsigned j = 0; j < degree(); ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p);
    return encode(detail::poly_mod(std::move(prod), spec().modulus, characteristic()));
  }

  Coeff pow(Coeff a, BigInt e) const {
    Coeff r = one();
    while (e > 0) {
      if ((e & 1) != 0) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Coeff inv(const Coeff& a) const {
    if (is_zero(a)) throw ArithmeticError("division by zero");
    if (is_rational()) return Rational(1 / std::get<Rational>(a));
    return pow(a, BigInt(order() - 2));
  }

  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  /// Some c with c^n = a, if one exists in this field.  Finite fields return
  /// the first root in enumeration order; over Q the real root (positive for
  /// even n).
  std::optional<Coeff> nth_root(const Coeff& a, unsigned n) const {
    if (n == 0) throw ArithmeticError("zeroth root");
    if (is_rational()) {
      const Rational& q = std::get<Rational>(a);
      if (q == 0) return Coeff{Rational(0)};
      const bool neg = q < 0;
      if (neg && n % 2 == 0) return std::nullopt;
      const Rational mag = neg ? Rational(-q) : q;
      auto num = integer_root(boost::multiprecision::numerator(mag), n);
      auto den = integer_root(boost::multiprecision::denominator(mag), n);
      if (!num || !den) return std::nullopt;
      Rational r(*num, *den);
      return Coeff{neg ? Rational(-r) : r};
    }
    for (std::uint64_t i = 0; i < order(); ++i) {
      const Coeff c = element(i);
      if (pow(c, n) == a) return c;
    }
    return std::nullopt;
  }

  /// Canonical text: reduced fraction, residue 0..p-1, or [a0,a1,...] for
  /// elements outside the prime subfield.
  std::string to_string(const Coeff& a) const {
    if (is_rational()) return std::get<Rational>(a).str();
    const auto x = digits(a);
    bool prime_subfield = true;
    for (unsigned i = 1; i < x.size(); ++i) prime_subfield = prime_subfield && x[i] == 0;
    if (prime_subfield) return std::to_string(x[0]);
    std::string out = "[";
    for (unsigned i = 0; i < x.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(x[i]);
    }
    return out + "]";
  }

  std::string name() const {
    if (is_rational()) return "Q";
    if (degree() == 1) return "GF(" + std::to_string(characteristic()) + ")";
    return "GF(" + std::to_string(characteristic()) + "^" + std::to_string(degree()) + ")";
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.data_ == b.data_ ||
           (a.spec().characteristic == b.spec().characteristic &&
            a.spec().extension_degree == b.spec().extension_degree &&
            a.spec().modulus == b.spec().modulus);
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

  Coeff encode(const detail::Digits& x) const {
    std::uint64_t r = 0;
    for (std::size_t i = x.size(); i-- > 0;) r = r * characteristic() + x[i];
    return static_cast<std::uint32_t>(r);
  }

  static std::optional<BigInt> integer_root(const BigInt& a, unsigned n) {
    if (a < 2) return a;
    // Binary search on [1, a].
    BigInt lo = 1, hi = a;
    while (lo <= hi) {
      BigInt mid = (lo + hi) / 2;
      BigInt pw = boost::multiprecision::pow(mid, n);
      if (pw == a) return mid;
      if (pw < a) lo = mid + 1;
      else hi = mid - 1;
    }
    return std::nullopt;
  }

  std::shared_ptr<const detail::FieldData> data_;
};

/// The ring Z, used for integer lifts.
class Integers {
 public:
  using value_type = IntCoeff;

  IntCoeff zero() const { return 0; }
  IntCoeff one() const { return 1; }
  IntCoeff from_int(const BigInt& n) const { return n; }
  IntCoeff from_int(long long n) const { return n; }
  bool is_zero(const IntCoeff& a) const { return a == 0; }
  bool is_one(const IntCoeff& a) const { return a == 1; }
  bool negative(const IntCoeff& a) const { return a < 0; }
  IntCoeff add(const IntCoeff& a, const IntCoeff& b) const { return a + b; }
  IntCoeff sub(const IntCoeff& a, const IntCoeff& b) const { return a - b; }
  IntCoeff neg(const IntCoeff& a) const { return -a; }
  IntCoeff mul(const IntCoeff& a, const IntCoeff& b) const { return a * b; }
  IntCoeff div(const IntCoeff& a, const IntCoeff& b) const {
    if (b == 0) throw ArithmeticError("division by zero");
    if (a % b != 0) throw ArithmeticError("inexact integer division");
    return a / b;
  }
  std::uint32_t characteristic() const { return 0; }
  std::string to_string(const IntCoeff& a) const { return a.str(); }
  std::string name() const { return "Z"; }

  friend bool operator==(const Integers&, const Integers&) { return true; }
};

/// Canonical lift of a prime-field element to {0, ..., p-1}.
inline IntCoeff lift_coeff(const Field& field, const Coeff& a) {
  if (field.is_rational()) throw UnsupportedLift("integer lift requires a finite prime field");
  if (field.degree() > 1)
    throw UnsupportedLift("integer lift of " + field.name() +
                          " coefficients needs an unramified extension; only prime fields lift");
  return IntCoeff(std::get<std::uint32_t>(a));
}

inline Coeff reduce_coeff(const IntCoeff& n, const Field& gf_p) {
  if (gf_p.is_rational() || gf_p.degree() > 1)
    throw FieldError("reduction target must be a prime field");
  return gf_p.from_int(n);
}

inline Coeff reduce_coeff(const IntCoeff& n, std::uint32_t p) { return reduce_coeff(n, Field::prime(p)); }

}  // namespace teissier
