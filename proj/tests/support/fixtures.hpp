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

// Named polynomials shared by the test binaries.
#pragma once

#include "teissier/teissier.hpp"

#include <string>
#include <vector>

namespace teissier::fixtures {

// Cusp z^2 - x^3.
inline const std::string kCusp = "z^2 - x1^3";
// Quasi-ordinary over GF(2) with two prepared vertices.
inline const std::string kTwoVertex = "z^2 - x1*x2*z - x1^3*x2 - x1*x2^3";
// (z^2 - x1^3*x2^6)^4 - x1^15*x2^30 written out over GF(2).
inline const std::string kTowerGF2 = "z^8 + x1^12*x2^24 + x1^15*x2^30";
// (z - x)^2 - x^3 expanded.
inline const std::string kShiftedCusp = "z^2 - 2*x1*z + x1^2 - x1^3";
// (z - x - x^2)^2 - x^9 expanded.
inline const std::string kTwiceShifted = "z^2 - 2*x1*z - 2*x1^2*z + x1^2 + 2*x1^3 + x1^4 - x1^9";
// (z^2 - x^3)^2 - x^7 expanded.
inline const std::string kTwoPairCurve = "z^4 - 2*x1^3*z^2 + x1^6 - x1^7";

inline Poly<Field> parse(const std::string& text, std::size_t d, const Field& k, std::size_t num_u = 0) {
  return parse_polynomial(text, VarContext::standard(d, num_u), k);
}

inline WeierstrassPoly weierstrass(const std::string& text, std::size_t d, const Field& k) {
  return weierstrass_validate(parse(text, d, k));
}

inline IntPoly parse_int(const std::string& text, std::size_t d, std::size_t num_u = 0) {
  return parse_polynomial(text, VarContext::standard(d, num_u), Integers{});
}

struct Char0Case {
  std::string text;
  std::size_t d;
};

/// Characteristic-zero instances for the kappa/discriminant cross-check.
inline std::vector<Char0Case> char0_cases() {
  return {{"z^2 - x1^3", 1},
          {"z^3 - x1^2", 1},
          {kTwoPairCurve, 1},
          {"z^2 - x1^3*x2^5", 2},
          {"z^2 - x1^2 - x2^2", 2},
          {"z^2 - x1^2*x2 - x1*x2^2", 2},
          {"z^2 - x1^3 - x2^3", 2},
          {kShiftedCusp, 1},
          {"z^3 - x1^2*x2^4", 2}};
}

}  // namespace teissier::fixtures
