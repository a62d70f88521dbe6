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

#include "gwinv/cohomology.hpp"
#include "gwinv/errors.hpp"
#include "gwinv/sampling.hpp"
#include "printers.hpp"

namespace gwinv {
namespace {

CohClass sym(const Field& f, std::initializer_list<const char*> args) {
  std::vector<SquareClass> v;
  for (auto a : args) v.push_back(parse_sc(f, a));
  return symbol(f, v);
}

TEST(Cohomology, Symbols) {
  auto f = parse_field("R((t))");
  EXPECT_TRUE(sym(f, {"1"}).is_zero());
  EXPECT_TRUE(sym(f, {"t", "1"}).is_zero());
  EXPECT_EQ(sym(f, {"t", "t"}), sym(f, {"-1", "t"}));
  EXPECT_EQ(sym(f, {"t", "t"}).to_string(), "(-1).(t)");
  EXPECT_TRUE(sym(f, {"t", "-t"}).is_zero());
  EXPECT_EQ(symbol(f, {}), CohClass::one(f));
  EXPECT_TRUE(sym(parse_field("F5((t))"), {"u", "u"}).is_zero());
  // Over F_3, (u)(u) = (-1)(u) lands in degree 2 of the base, which vanishes.
  EXPECT_TRUE(sym(parse_field("F3((t))"), {"u", "u"}).is_zero());
  EXPECT_EQ(sym(parse_field("F3((t))"), {"-1", "t"}).to_string(), "(u).(t)");
}

TEST(Cohomology, CupProducts) {
  auto f = parse_field("R((t1))((t2))");
  EXPECT_EQ(cup(degree_one(parse_sc(f, "t1")), degree_one(parse_sc(f, "t2"))).to_string(), "(t1).(t2)");
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) EXPECT_EQ(minus_one_power(f, a) * minus_one_power(f, b), minus_one_power(f, a + b));
  EXPECT_EQ((minus_one_power(f, 2) * degree_one(parse_sc(f, "t1"))).to_string(), "(-1)^2.(t1)");
  auto x = degree_one(parse_sc(f, "-t1*t2"));
  EXPECT_EQ(x * x, minus_one_power(f, 1) * x);
  EXPECT_TRUE(minus_one_power(parse_field("C((t))"), 1).is_zero());
  EXPECT_THROW(cup(x, CohClass::one(parse_field("R"))), RingMismatch);
}

TEST(Cohomology, DegreeOneIsAdditive) {
  for (const Field& f : sample_fields()) {
    auto all = enumerate_sc(f);
    for (auto& a : all)
      for (auto& b : all) EXPECT_EQ(degree_one(a * b), degree_one(a) + degree_one(b));
  }
}

TEST(Cohomology, MilnorMaps) {
  auto r = parse_field("R");
  auto e2 = e_n(witt_canonical(parse_form(r, "pf(-1,-1)")), 2);
  EXPECT_EQ(e2, minus_one_power(r, 2));
  EXPECT_FALSE(e2.is_zero());
  auto f = parse_field("F3((t1))((t2))");
  EXPECT_EQ(e_n(witt_canonical(parse_form(f, "pf(u*t1)")), 1), degree_one(parse_sc(f, "u*t1")));
  // e_0 is the dimension mod 2.
  EXPECT_EQ(e_n(witt_canonical(parse_form(f, "diag(u)")), 0), CohClass::one(f));
  EXPECT_TRUE(e_n(witt_canonical(parse_form(f, "diag(1,1)")), 0).is_zero());
  EXPECT_THROW(e_n(witt_canonical(parse_form(f, "diag(1)")), 1), MembershipError);
  EXPECT_THROW(e_n(witt_canonical(parse_form(f, "pf(t1)")), 2), MembershipError);
}

TEST(Cohomology, MilnorMapOfPfisterIsSymbol) {
  for (const char* s : {"R((t1))((t2))((t3))", "F3((t1))((t2))", "F5((t1))((t2))", "C((t1))((t2))((t3))"}) {
    auto f = parse_field(s);
    Rng rng(5);
    for (int i = 0; i < 60; ++i) {
      int n = rng.range(1, 3);
      auto slots = random_slots(f, n, rng);
      EXPECT_EQ(e_n(witt_canonical(pfister(slots)), n), symbol(f, slots)) << s;
    }
  }
}

TEST(Cohomology, MilnorMapIsAdditive) {
  Rng rng(9);
  for (const Field& f : sample_fields())
    for (int i = 0; i < 20; ++i) {
      auto p = pfister(random_slots(f, 2, rng)), q = pfister(random_slots(f, 2, rng));
      auto s = witt_canonical(p + q);
      EXPECT_EQ(e_n(s, 2), e_n(witt_canonical(p), 2) + e_n(witt_canonical(q), 2));
    }
}

TEST(Cohomology, Residues) {
  auto f = parse_field("F3((s))((t))");
  auto k = residue_field(f);
  EXPECT_EQ(coh_residue(sym(f, {"t", "u"})), degree_one(parse_sc(k, "u")));
  EXPECT_TRUE(coh_residue(sym(f, {"u"})).is_zero());
  EXPECT_EQ(coh_residue(sym(f, {"s", "t"})), degree_one(parse_sc(k, "s")));
  EXPECT_THROW(coh_residue(CohClass::one(parse_field("F3"))), DomainError);
}

TEST(Cohomology, ResidueSquareCommutes) {
  Rng rng(13);
  for (const Field& f : sample_fields()) {
    if (f->depth() == 0) continue;
    for (int i = 0; i < 100; ++i) {
      int d = rng.range(1, 3);
      auto w = witt_canonical(random_In(f, d, rng.range(1, 3), rng));
      EXPECT_EQ(coh_residue(e_n(w, d)), e_n(second_residue(w), d - 1)) << f->to_string();
    }
  }
}

}  // namespace
}  // namespace gwinv
