/* Copyright 2026 The gwinv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "gwinv/errors.hpp"
#include "gwinv/factorized.hpp"
#include "gwinv/field.hpp"
#include "printers.hpp"

namespace gwinv {
namespace {

SymbolicInvariant fb(int n, Mode m, int d) { return SymbolicInvariant::basis_element(n, m, Basis::F, d); }

void expect_same_delta1(const FactorizedForm& x, const FactorizedForm& y) {
  int n = x.n - 1;
  for (Mode m : {Mode::W, Mode::H})
    for (int d = 1; d <= 4; ++d)
      EXPECT_EQ(delta_t_eval(x, fb(n, m, d), 1), delta_t_eval(y, fb(n, m, d), 1)) << mode_name(m) << " d=" << d;
}

TEST(Factorized, DeltaZeroIsPlainEvaluation) {
  auto f = parse_field("R((t1))((t2))");
  FactorizedForm x{f, 2, {parse_sc(f, "t1")}, {PfTerm{1, parse_sc(f, "t2"), {parse_sc(f, "-1")}}}};
  ASSERT_NO_THROW(x.validate());
  for (Mode m : {Mode::W, Mode::H})
    for (int d = 1; d <= 4; ++d)
      EXPECT_EQ(delta_t_eval(x, fb(2, m, d), 0), evaluate(fb(2, m, d), x.product()));
  EXPECT_THROW(delta_t_eval(x, fb(2, Mode::W, 1), 2), DomainError);
  EXPECT_THROW(delta_t_eval(x, fb(2, Mode::W, 1), 1), DomainError);
  auto unnormalized = SymbolicInvariant::constant(1, Mode::W, Basis::F, UCoeff::from_int(Mode::W, 1));
  EXPECT_THROW(delta_t_eval(x, unnormalized, 1), DomainError);
}

TEST(Factorized, ZeroCofactor) {
  auto f = parse_field("F5((t1))");
  FactorizedForm x{f, 2, {parse_sc(f, "t1")}, {}};
  for (Mode m : {Mode::W, Mode::H})
    for (int d = 1; d <= 3; ++d) EXPECT_TRUE(delta_t_eval(x, fb(1, m, d), 1).is_zero());
}

TEST(Factorized, ValidateRejectsWrongLevel) {
  auto f = parse_field("R((t1))");
  FactorizedForm x{f, 3, {parse_sc(f, "t1")}, {PfTerm{1, SquareClass::one(f), {parse_sc(f, "-1")}}}};
  EXPECT_THROW(x.validate(), DomainError);
}

TEST(Factorized, HyperbolicPerturbation) {
  // <<a>> <<-a>> is hyperbolic, so adding <<-a>> psi to the cofactor keeps the class.
  auto f = parse_field("R((t1))((t2))((t3))");
  auto a = parse_sc(f, "t1");
  FactorizedForm x{f, 3, {a}, {PfTerm{1, parse_sc(f, "t3"), {parse_sc(f, "t2"), parse_sc(f, "-1")}}}};
  FactorizedForm y = x;
  y.cofactor.push_back(PfTerm{-1, parse_sc(f, "t2"), {minus_one(f) * a, parse_sc(f, "t3")}});
  EXPECT_TRUE(witt_canonical(x.product()) == witt_canonical(y.product()));
  expect_same_delta1(x, y);
}

TEST(Factorized, ScalarSwap) {
  // <<a, c>> = <<-ac, c>>.
  auto f = parse_field("R((t1))((t2))");
  auto a = parse_sc(f, "t1"), c = parse_sc(f, "t2");
  FactorizedForm x{f, 2, {a}, {PfTerm{1, SquareClass::one(f), {c}}}};
  FactorizedForm y{f, 2, {minus_one(f) * a * c}, {PfTerm{1, SquareClass::one(f), {c}}}};
  EXPECT_TRUE(witt_canonical(x.product()) == witt_canonical(y.product()));
  expect_same_delta1(x, y);
}

TEST(Factorized, AlternativesShareTheWittClass) {
  for (const char* text : {"R((t1))((t2))", "F3((t1))((t2))", "C((t1))((t2))((t3))"}) {
    auto f = parse_field(text);
    Rng rng(3);
    auto common = parse_sc(f, "t2");
    FactorizedForm x{f, 2, {parse_sc(f, "t1")}, {PfTerm{1, SquareClass::one(f), {common}},
                                                  PfTerm{-1, parse_sc(f, "t1"), {common}}}};
    auto alts = alt_factorizations(x, 6, rng);
    ASSERT_GE(alts.size(), 2u) << text;
    EXPECT_TRUE(alts[0].factor == x.factor);
    EXPECT_EQ(alts[0].cofactor.size(), x.cofactor.size());
    auto target = witt_canonical(x.product());
    for (const auto& y : alts) {
      EXPECT_TRUE(witt_canonical(y.product()) == target) << text;
      expect_same_delta1(x, y);
    }
  }
  auto f = parse_field("R((t1))");
  FactorizedForm two{f, 2, {parse_sc(f, "t1"), parse_sc(f, "-1")}, {}};
  Rng rng(0);
  EXPECT_THROW(alt_factorizations(two, 4, rng), DomainError);
}

TEST(Factorized, LemmaExamples) {
  auto f = parse_field("R((t1))((t2))");
  auto one = SquareClass::one(f);
  auto a = parse_sc(f, "t1"), b = parse_sc(f, "t2");
  auto mab = minus_one(f) * a * b;
  EXPECT_TRUE(lemma_factor_check(a, b, {{one, one}}, 2));
  for (int k = 1; k <= 4; ++k) {
    EXPECT_TRUE(lemma_factor_check(a, b, {{parse_sc(f, "-1"), mab}, {b, one}}, k)) << k;
    EXPECT_TRUE(lemma_factor_check(a, a, {{b, parse_sc(f, "-1")}}, k)) << k;
  }
  EXPECT_THROW(lemma_factor_check(a, b, {{one, parse_sc(f, "t1")}}, 1), DomainError);
  EXPECT_THROW(lemma_factor_check(a, b, {{one, one}}, 0), DomainError);
}

}  // namespace
}  // namespace gwinv
