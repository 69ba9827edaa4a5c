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
 * Exact rational phase-one simplex: decides whether {x >= 0 : A x = b} is
 * nonempty.  Dense tableau, Bland's smallest-index rule (no cycling), no
 * tolerances.
 */
#pragma once

#include "teissier/ring.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace teissier {

using RationalMatrix = std::vector<std::vector<Rational>>;

inline bool lp_feasible(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("lp_feasible: dimension mismatch");
  if (rows == 0) return true;
  const std::size_t cols = a.front().size();

  // Tableau columns: original variables, one artificial per row, rhs.
  const std::size_t width = cols + rows + 1;
  RationalMatrix t(rows + 1, std::vector<Rational>(width, Rational(0)));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][cols + i] = 1;
    t[i][width - 1] = flip ? Rational(-b[i]) : b[i];
    basis[i] = cols + i;
  }
  // Objective row: minimise the sum of artificials, written as reduced costs.
  auto& obj = t[rows];
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (j < cols || j == width - 1) obj[j] -= t[i][j];

  for (;;) {
    // Bland: entering column is the smallest index with negative reduced cost.
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (!enter) break;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][*enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][*enter];
      if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so some row always qualifies.
    if (!leave) throw std::logic_error("lp_feasible: unbounded phase-one problem");
    const std::size_t r = *leave;
    const Rational pivot = t[r][*enter];
    for (auto& v : t[r]) v /= pivot;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == r || t[i][*enter] == 0) continue;
      const Rational factor = t[i][*enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= factor * t[r][j];
    }
    basis[r] = *enter;
  }
  return obj[width - 1] == 0;
}

}  // namespace teissier
