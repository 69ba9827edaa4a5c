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


#include "support/fixtures.hpp"
#include "support/properties.hpp"

#include <gtest/gtest.h>

using namespace teissier;
using fixtures::parse;
using fixtures::weierstrass;

namespace {

const Field kGF2 = Field::prime(2);
const Field kQ = Field::rationals();

std::vector<std::string> presentation_text(const KappaResult& r) {
  return r.presentation ? format_presentation(*r.presentation) : std::vector<std::string>{};
}

}  // namespace

TEST(Decompose, FourthPowerInCharacteristicTwo) {
  const Decomposition d = binomial_power_decompose(parse("z^8 + x1^12*x2^24", 2, kGF2), 2);
  ASSERT_EQ(d.status, DecomposeStatus::binomial_power);
  EXPECT_EQ(d.power->n, 2u);
  EXPECT_EQ(d.power->e, 4u);
  EXPECT_EQ(format_monomial(d.power->tail, 2), "x1^3*x2^6");
  EXPECT_TRUE(kGF2.is_one(d.power->c));
}

TEST(Decompose, SquareOverRationals) {
  const Poly<Field> in = parse("z^4 - 2*x1^3*z^2 + x1^6", 1, kQ);
  const Decomposition d = binomial_power_decompose(in, 1);
  ASSERT_EQ(d.status, DecomposeStatus::binomial_power);
  EXPECT_EQ(d.power->e, 2u);
  EXPECT_EQ(d.power->c, Coeff{Rational(1)});
  EXPECT_EQ(d.power->expand(kQ, 1), in);
}

TEST(Decompose, SolvableLinearPower) {
  const Decomposition d = binomial_power_decompose(parse("z^2 - 2*x1*z + x1^2", 1, kQ), 1);
  ASSERT_EQ(d.status, DecomposeStatus::binomial_power);
  EXPECT_EQ(d.power->n, 1u);
  EXPECT_EQ(d.power->e, 2u);
}

TEST(Decompose, PlainBinomial) {
  const Decomposition d = binomial_power_decompose(parse("z^2 + x1^3", 1, kQ), 1);
  ASSERT_EQ(d.status, DecomposeStatus::binomial_power);
  EXPECT_EQ(d.power->n, 2u);
  EXPECT_EQ(d.power->e, 1u);
  EXPECT_EQ(d.power->c, Coeff{Rational(-1)});
}

TEST(Decompose, Failures) {
  EXPECT_EQ(binomial_power_decompose(parse("z^2 + x1 + x1^2", 1, kQ), 1).status, DecomposeStatus::not_binomial);
  EXPECT_EQ(binomial_power_decompose(parse("z^2 + x1^2*z + x1^2", 1, kQ), 1).status,
            DecomposeStatus::not_binomial);
  EXPECT_THROW(binomial_power_decompose(parse("2*z^2 + x1", 1, kQ), 1), ContractViolation);
  EXPECT_THROW(binomial_power_decompose(parse("x1", 1, kQ), 1), ContractViolation);
}

TEST(InitialForm, RequiresVertex) {
  const Poly<Field> f = parse("z^2 + x1^3 + x1^5", 1, kQ);
  EXPECT_EQ(format(initial_form(f, QPoint{{Rational(3, 2)}}, {}, 1, 2)), "z^2 + x1^3");
  EXPECT_THROW(initial_form(f, QPoint{{Rational(5, 2)}}, {}, 1, 2), ContractViolation);
}

TEST(Binomialize, RewriteRaisesExponent) {
  // Second stage of the GF(2) tower: depth 0 only sees a plain binomial.
  StageState s{parse("u1^4 + x1^15*x2^30", 2, kGF2, 1), 3, 4,
               WeightMap{{2, QPoint{{Rational(3, 2), Rational(3)}}}}, {}};
  s.relations.push_back({3, parse("z^2 + x1^3*x2^6", 2, kGF2, 1),
                         BinomialHead<Field>{2, 2, kGF2.one(), Monomial({3, 6})}});
  const QPoint v{{Rational(15, 4), Rational(15, 2)}};
  const auto shallow = binomialize_modulo(s, v, 0, 64);
  ASSERT_TRUE(shallow);
  EXPECT_EQ(shallow->power.e, 1u);
  const auto deep = binomialize_modulo(s, v, 1, 64);
  ASSERT_TRUE(deep);
  EXPECT_EQ(deep->power.e, 2u);
  EXPECT_EQ(deep->depth, 1u);
  EXPECT_EQ(format(deep->initial), "u1^4 + x1^12*x2^24*z^2");
}

TEST(Kappa, CuspInCharacteristicTwo) {
  const KappaResult r = compute_kappa(weierstrass(fixtures::kCusp, 1, kGF2));
  EXPECT_EQ(format_kappa(r.kappa), "(3/2, inf)");
  EXPECT_EQ(presentation_text(r), std::vector<std::string>{"z^2 + x1^3"});
}

TEST(Kappa, TwoVerticesGiveMinusOne) {
  const KappaResult r = compute_kappa(weierstrass(fixtures::kTwoVertex, 2, kGF2));
  EXPECT_EQ(format_kappa(r.kappa), "(-1)");
  EXPECT_FALSE(r.presentation);
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_NE(r.diagnostics[0].find("translation-minimal"), std::string::npos);
}

TEST(Kappa, ThreeStageTower) {
  const KappaResult r = compute_kappa(weierstrass(fixtures::kTowerGF2, 2, kGF2));
  EXPECT_EQ(format_kappa(r.kappa), "((3/2,3), (15/4,15/2), (63/8,63/4), inf)");
  EXPECT_EQ(r.kappa.multiplicities, (std::vector<std::uint32_t>{8, 4, 2, 1}));
  EXPECT_EQ(presentation_text(r), (std::vector<std::string>{"u1 - (z^2 - x1^3*x2^6)", "u2 - (u1^2 - x1^6*x2^12*z)",
                                                            "u2^2 + x1^12*x2^24*u1"}));
  ASSERT_TRUE(r.presentation);
  EXPECT_TRUE(verify_overweight(*r.presentation).ok);
  EXPECT_EQ(presentation_round_trip(*r.presentation, 64), parse(fixtures::kTowerGF2, 2, kGF2));
}

TEST(Kappa, FactoredInputMatchesExpanded) {
  const Poly<Field> q = parse("z^2 - x1^3*x2^6", 2, kGF2);
  const Poly<Field> f = pow(q, 4) - parse("x1^15*x2^30", 2, kGF2);
  EXPECT_EQ(f, parse(fixtures::kTowerGF2, 2, kGF2));
}

TEST(Kappa, SingleElimination) {
  const KappaResult r = compute_kappa(weierstrass(fixtures::kShiftedCusp, 1, kQ));
  EXPECT_EQ(format_kappa(r.kappa), "(3/2, inf)");
  EXPECT_EQ(r.kappa.budget_used, 1u);
  EXPECT_EQ(r.shrink_checks, 1u);
  ASSERT_FALSE(r.stage_polyhedra.empty());
  EXPECT_EQ(format_polyhedron(r.stage_polyhedra[0]), "{3/2}");
  ASSERT_TRUE(r.presentation);
  EXPECT_EQ(format(r.presentation->z_shift), "x1");
}

TEST(Kappa, TwoEliminations) {
  const KappaResult r = compute_kappa(weierstrass(fixtures::kTwiceShifted, 1, kQ));
  EXPECT_EQ(format_kappa(r.kappa), "(9/2, inf)");
  EXPECT_EQ(r.kappa.budget_used, 2u);
  EXPECT_EQ(format_polyhedron(r.stage_polyhedra[0]), "{9/2}");
}

TEST(Kappa, TwoPairCurve) {
  const KappaResult r = compute_kappa(weierstrass(fixtures::kTwoPairCurve, 1, kQ));
  EXPECT_EQ(format_kappa(r.kappa), "(3/2, 7/2, inf)");
  EXPECT_EQ(presentation_text(r), (std::vector<std::string>{"u1 - (z^2 - x1^3)", "u1^2 - x1^7"}));
}

TEST(Kappa, PurePowerIsInfinityWithoutVertices) {
  const KappaResult r = compute_kappa(weierstrass("z^2 - 2*x1*z + x1^2", 1, kQ));
  EXPECT_EQ(format_kappa(r.kappa), "(inf)");
  EXPECT_EQ(r.kappa.budget_used, 1u);
}

TEST(Kappa, ReducibleInputIsFlagged) {
  const KappaResult r = compute_kappa(weierstrass("z^2 - x1^2", 1, kQ));
  EXPECT_EQ(r.kappa.terminal, Terminal::minus_one);
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_NE(r.diagnostics[0].find("not a binomial power"), std::string::npos);
}

TEST(Kappa, TruncationExhausted) {
  KappaConfig cfg;
  cfg.truncation = 2;
  const KappaResult r = compute_kappa(weierstrass(fixtures::kTowerGF2, 2, kGF2), cfg);
  EXPECT_EQ(r.kappa.terminal, Terminal::inconclusive);
  EXPECT_FALSE(r.presentation);
  cfg.truncation = 30;
  EXPECT_EQ(compute_kappa(weierstrass(fixtures::kTowerGF2, 2, kGF2), cfg).kappa.terminal, Terminal::inconclusive);
  cfg.truncation = 64;
  EXPECT_EQ(compute_kappa(weierstrass(fixtures::kTowerGF2, 2, kGF2), cfg).kappa.terminal, Terminal::infinity);
}

TEST(Kappa, BudgetExhausted) {
  KappaConfig cfg;
  cfg.budget = 1;
  const KappaResult r = compute_kappa(weierstrass(fixtures::kTwiceShifted, 1, kQ), cfg);
  EXPECT_EQ(r.kappa.terminal, Terminal::inconclusive);
  cfg.budget = 0;
  EXPECT_THROW(compute_kappa(weierstrass(fixtures::kCusp, 1, kQ), cfg), ConfigError);
}

TEST(Overweight, DetectsLightTerm) {
  KappaResult r = compute_kappa(weierstrass(fixtures::kTowerGF2, 2, kGF2));
  ASSERT_TRUE(r.presentation);
  OverweightPresentation p = *r.presentation;
  p.relations[0].rhs += parse("x1^3*x2^5", 2, kGF2, 2);  // lighter than (3,6)
  const OverweightCheck c = verify_overweight(p);
  EXPECT_FALSE(c.ok);
  ASSERT_FALSE(c.violations.empty());
  EXPECT_NE(c.violations[0].find("x1^3*x2^5"), std::string::npos);
}

TEST(EngineProperties, RandomCorpus) {
  std::vector<WeierstrassPoly> fixtures_list{weierstrass(fixtures::kTowerGF2, 2, kGF2),
                                             weierstrass(fixtures::kShiftedCusp, 1, kQ),
                                             weierstrass(fixtures::kTwiceShifted, 1, kQ)};
  const auto r = props::engine_properties(31, 200, fixtures_list);
  EXPECT_TRUE(r.reexpansion.passed(200)) << r.reexpansion.first_failure;
  EXPECT_TRUE(r.round_trip.passed(200)) << r.round_trip.first_failure;
  EXPECT_TRUE(r.overweight.passed(200)) << r.overweight.first_failure;
  EXPECT_TRUE(r.descent.passed(200)) << r.descent.first_failure;
}

TEST(Kappa, NonPrimitiveBinomialIsRejected) {
  const Decomposition d = binomial_power_decompose(parse("z^2 - x1^2", 1, kQ), 1);
  EXPECT_EQ(d.status, DecomposeStatus::not_binomial);
  const Decomposition ok = binomial_power_decompose(parse("z^2 - 2*x1*z + x1^2", 1, kQ), 1);
  ASSERT_EQ(ok.status, DecomposeStatus::binomial_power);
  EXPECT_EQ(ok.power->n, 1u);
  EXPECT_EQ(ok.power->e, 2u);
}
