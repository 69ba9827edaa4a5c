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
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace teissier {

// Variable layout used throughout: indices 0..d-1 are x1..xd, index d is z,
// index d+j is u_j.  The auxiliary variables (z, u1, u2, ...) are numbered
// aux 0, 1, 2, ... so that aux k sits at index d+k.

/// Exponent vector with trailing zeros trimmed, so monomials over different
/// numbers of variables compare and hash consistently.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) { trim(); }

  static Monomial variable(std::size_t index, std::uint32_t power = 1) {
    std::vector<std::uint32_t> e(index + 1, 0);
    e[index] = power;
    return Monomial(std::move(e));
  }

  std::uint32_t operator[](std::size_t i) const { return i < exps_.size() ? exps_[i] : 0; }
  std::size_t size() const { return exps_.size(); }
  bool is_one() const { return exps_.empty(); }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  void set(std::size_t i, std::uint32_t v) {
    if (i >= exps_.size()) {
      if (v == 0) return;
      exps_.resize(i + 1, 0);
    }
    exps_[i] = v;
    trim();
  }

  /// Sum of the exponents of the first `nx` variables.
  std::uint64_t x_degree(std::size_t nx) const {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < std::min(nx, exps_.size()); ++i) s += exps_[i];
    return s;
  }

  /// True if any variable at index >= nx occurs.
  bool has_aux(std::size_t nx) const { return exps_.size() > nx; }

  bool divides(const Monomial& other) const {
    if (exps_.size() > other.exps_.size()) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  /// other / *this when divisible.
  std::optional<Monomial> divide_into(const Monomial& other) const {
    if (!divides(other)) return std::nullopt;
    std::vector<std::uint32_t> e = other.exps_;
    for (std::size_t i = 0; i < exps_.size(); ++i) e[i] -= exps_[i];
    return Monomial(std::move(e));
  }

  /// The monomial with exponent at `index` removed.
  Monomial without(std::size_t index) const {
    Monomial m = *this;
    m.set(index, 0);
    return m;
  }

  Monomial pow(std::uint32_t k) const {
    std::vector<std::uint32_t> e = exps_;
    for (auto& v : e) v *= k;
    return Monomial(std::move(e));
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> e(std::max(a.exps_.size(), b.exps_.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
    return Monomial(std::move(e));
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Lexicographic with x1 most significant; a monomial order, used for map
  // keys and as the leading-term order in exact division.
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

 private:
  void trim() {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  }
  std::vector<std::uint32_t> exps_;
};

}  // namespace teissier
