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

#include <cstdint>
#include <limits>

#include "gwinv/errors.hpp"
#include "gwinv/sampling.hpp"
#include "printers.hpp"
#include "gwinv/witt.hpp"

namespace gwinv {
namespace {

GwElement F(const Field& f, const char* s) { return parse_form(f, s); }
WittClass W(const Field& f, const char* s) { return witt_canonical(parse_form(f, s)); }

TEST(Witt, HyperbolicVanishes) {
  for (const char* s : {"C", "R", "F3", "F5((t1))", "R((t1))((t2))"}) {
    auto f = parse_field(s);
    EXPECT_TRUE(W(f, "H").is_zero()) << s;
    EXPECT_TRUE(W(f, "diag(1,-1)").is_zero()) << s;
  }
  auto f = parse_field("R((t))");
  EXPECT_TRUE(W(f, "diag(t,-t)").is_zero());
  EXPECT_FALSE(W(parse_field("R"), "diag(1,1)").is_zero());
}

TEST(Witt, BaseWittRings) {
  // W(R) = Z by signature, W(C) = Z/2, W(F_q) = Z/4 or (Z/2)^2.
  auto r = parse_field("R");
  EXPECT_EQ(W(r, "diag(1,1,-1)"), W(r, "diag(1)"));
  EXPECT_FALSE(W(r, "8*diag(1)").is_zero());
  EXPECT_TRUE(W(parse_field("C"), "2*diag(1)").is_zero());
  auto f3 = parse_field("F3");
  EXPECT_FALSE(W(f3, "2*diag(1)").is_zero());
  EXPECT_TRUE(W(f3, "4*diag(1)").is_zero());
  EXPECT_EQ(W(f3, "2*diag(1)"), W(f3, "2*diag(u)"));
  auto f5 = parse_field("F5");
  EXPECT_TRUE(W(f5, "2*diag(1)").is_zero());
  EXPECT_FALSE(W(f5, "diag(1,u)").is_zero());
  EXPECT_TRUE(W(f5, "diag(1,1,u,u)").is_zero());
}

TEST(Witt, CanonicalIsFixpoint) {
  Rng rng(7);
  for (const Field& f : sample_fields()) {
    for (int i = 0; i < 20; ++i) {
      auto w = witt_canonical(random_form(f, rng.range(0, 6), rng));
      EXPECT_EQ(witt_canonical(to_gw(w)), w);
      EXPECT_TRUE(to_gw(w).is_form());
    }
  }
}

TEST(Witt, GwEquality) {
  auto f = parse_field("R((t1))");
  EXPECT_TRUE(gw_equal(F(f, "diag(t1,t1)"), F(f, "2*diag(t1)")));
  EXPECT_FALSE(gw_equal(F(parse_field("R"), "diag(1,1)"), F(parse_field("R"), "diag(1,-1)")));
  EXPECT_TRUE(gw_equal(F(f, "pf(t1,t1)"), F(f, "pf(-1,t1)")));
  EXPECT_TRUE(gw_equal(F(f, "pf(t1,t1)"), F(f, "2*pf(t1)")));
  EXPECT_FALSE(gw_equal(F(f, "diag(1)"), F(f, "diag(1) + H")));
  EXPECT_TRUE(gw_equal(F(f, "diag(t1,-t1)"), F(f, "H")));
}

TEST(Witt, PfisterConstructors) {
  auto f = parse_field("F3((t1))((t2))");
  auto a = parse_sc(f, "t1"), b = parse_sc(f, "u*t2");
  EXPECT_TRUE(gpfister({SquareClass::one(f)}).structurally_zero());
  EXPECT_EQ(pfister({a, b}).dim(), 4);
  EXPECT_EQ(gpfister({a, b}).dim(), 0);
  EXPECT_EQ(witt_canonical(pfister({a}) * pfister({a})), witt_canonical(2 * pfister({a})));
  EXPECT_EQ(witt_canonical(pfister({a}) * pfister({b})), witt_canonical(pfister({a, b})));
  EXPECT_TRUE(gw_equal(GwElement::of(a) * GwElement::of(b), GwElement::of(a * b)));
  EXPECT_TRUE((pfister({a}) * GwElement(f)).structurally_zero());
  EXPECT_EQ(F(f, "pf(t1)").to_string(), "diag(1) + diag(u*t1)");
}

TEST(Witt, LambdaPowers) {
  auto f = parse_field("R((t1))((t2))");
  auto x = F(f, "diag(t1,-t2)");
  EXPECT_TRUE(gw_equal(lambda_power(2, x), F(f, "diag(-t1*t2)")));
  EXPECT_TRUE(gw_equal(lambda_power(0, x), GwElement::one(f)));
  EXPECT_TRUE(gw_equal(lambda_power(3, x), GwElement(f)));
  // lambda_t(-<a>) = 1 / (1 + <a> t) = sum (-<a>)^k t^k, and <a>^2 = <1>.
  auto neg = F(f, "-diag(t1)");
  EXPECT_TRUE(gw_equal(lambda_power(1, neg), neg));
  EXPECT_TRUE(gw_equal(lambda_power(2, neg), GwElement::one(f)));
  EXPECT_TRUE(gw_equal(lambda_power(3, neg), neg));
  auto g = gpfister({parse_sc(f, "-t1")});
  for (int d = 1; d <= 5; ++d) EXPECT_TRUE(gw_equal(lambda_power(d, g), g)) << d;
}

TEST(Witt, FiltrationMembership) {
  auto r = parse_field("R");
  EXPECT_TRUE(is_in_In(F(r, "diag(1,1)"), 1));
  EXPECT_FALSE(is_in_In(F(r, "diag(1,1)"), 2));
  auto p3 = F(r, "pf(-1,-1,-1)");
  EXPECT_TRUE(is_in_In(p3, 3));
  EXPECT_FALSE(is_in_In(p3, 4));
  auto f = parse_field("F3((t))");
  EXPECT_TRUE(is_in_In(F(f, "pf(u,t)"), 2));
  EXPECT_FALSE(is_in_In(F(f, "pf(u,t)"), 3));
  EXPECT_FALSE(is_in_In(F(f, "diag(1)"), 1));
  for (int n = 0; n <= 6; ++n) EXPECT_TRUE(is_in_In(WittClass(f), n));
}

TEST(Witt, HatLift) {
  auto f = parse_field("R((t1))");
  auto hl = hat_lift(F(f, "pf(t1)"));
  EXPECT_TRUE(gw_equal(hl, F(f, "diag(-t1) - diag(-1)")));
  EXPECT_EQ(hl.dim(), 0);
  EXPECT_TRUE(hat_lift(WittClass(f)).structurally_zero());
  EXPECT_THROW(hat_lift(F(f, "diag(1)")), DomainError);
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    auto q = random_In(f, rng.range(1, 2), rng.range(0, 3), rng);
    auto h = hat_lift(q);
    EXPECT_EQ(h.dim(), 0);
    EXPECT_EQ(witt_canonical(h), witt_canonical(q));
  }
}

TEST(Witt, SecondResidue) {
  auto f = parse_field("F5((s))((t))");
  auto k = residue_field(f);
  EXPECT_EQ(second_residue(W(f, "diag(t)")), witt_canonical(GwElement::one(k)));
  EXPECT_TRUE(second_residue(W(f, "diag(u*s)")).is_zero());
  // <<t>> q = q - <t> q for unramified q.
  EXPECT_EQ(second_residue(W(f, "pf(t)")), -witt_canonical(GwElement::one(k)));
  EXPECT_EQ(second_residue(witt_canonical(F(f, "pf(t)") * F(f, "diag(s,u)"))),
            -witt_canonical(parse_form(k, "diag(s,u)")));
  EXPECT_THROW(second_residue(W(parse_field("F5"), "diag(1)")), DomainError);
}

TEST(Witt, ParseForm) {
  auto f = parse_field("R((t1))");
  EXPECT_TRUE(gw_equal(F(f, "2*diag(1,t1) - pf(t1) + H"), F(f, "diag(1,1,t1,t1,-1) - diag(-t1)")));
  EXPECT_TRUE(gw_equal(F(f, "3"), F(f, "3*diag(1)")));
  EXPECT_TRUE(gw_equal(F(f, "-pf(t1)"), -F(f, "pf(t1)")));
  for (const char* bad : {"", "diag(", "diag(z)", "pf()", "2*", "foo", "diag(1) +", "2 diag(1)"})
    EXPECT_THROW(parse_form(f, bad), ParseError) << bad;
  EXPECT_EQ(witt_canonical(GwElement::one(f)).to_string(), "1");
  EXPECT_EQ(WittClass(f).to_string(), "0");
}

TEST(Witt, CheckedArithmetic) {
  constexpr auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(checked_mul(big, 2), DomainError);
  EXPECT_THROW(checked_add(big, 1), DomainError);
  EXPECT_EQ(checked_add(-3, 5), 2);
  EXPECT_THROW(to_int64(Int(big) + 1), DomainError);
}

TEST(Witt, FieldMismatch) {
  auto a = GwElement::one(parse_field("R"));
  auto b = GwElement::one(parse_field("R((t))"));
  EXPECT_THROW(a + b, RingMismatch);
  EXPECT_THROW(a * b, RingMismatch);
}

TEST(Witt, TwiceIsMinusOnePfister) {
  Rng rng(11);
  for (const Field& f : sample_fields())
    for (int i = 0; i < 10; ++i) {
      auto q = random_form(f, rng.range(1, 5), rng);
      EXPECT_EQ(witt_canonical(pfister({minus_one(f)}) * q), witt_canonical(2 * q));
    }
}

}  // namespace
}  // namespace gwinv
