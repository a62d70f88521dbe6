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

#include <vector>

#include "gwinv/series.hpp"

namespace gwinv {
namespace {

std::vector<Int> ints(std::initializer_list<long long> v) { return std::vector<Int>(v.begin(), v.end()); }

// Frozen from an independent rational series reversion, D = 8.
TEST(Series, XAndHMatchOracle) {
  EXPECT_EQ(build_x(1, 8).coeffs(), ints({0, 1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(build_x(3, 8).coeffs(), ints({0, 1, 4, 11, 24, 45, 76, 119, 176}));
  EXPECT_EQ(build_x(4, 8).coeffs(), ints({0, 1, 8, 43, 176, 589, 1688, 4279, 9824}));
  EXPECT_EQ(build_h(1, 8).coeffs(), ints({0, 1, -1, 1, -1, 1, -1, 1, -1}));
  EXPECT_EQ(build_h(2, 8).coeffs(), ints({0, 1, -2, 5, -14, 42, -132, 429, -1430}));
  EXPECT_EQ(build_h(3, 8).coeffs(), ints({0, 1, -4, 21, -124, 782, -5144, 34845, -241196}));
  EXPECT_EQ(build_h(4, 8).coeffs(), ints({0, 1, -8, 85, -1016, 12958, -172208, 2354653, -32874584}));
}

TEST(Series, CatalanAndP) {
  EXPECT_EQ(catalan(8).coeffs(), ints({1, 1, 2, 5, 14, 42, 132, 429, 1430}));
  EXPECT_EQ(build_p(3, 3).coeffs(), ints({0, 1, 4, 0}));
  EXPECT_EQ(p_inverse_catalan(1, 8).coeffs(), ints({0, 1, -1, 2, -5, 14, -42, 132, -429}));
  // h_{n+1} = h_n o p_n^{-1}.
  EXPECT_EQ(compose(build_h(1, 8), p_inverse_catalan(1, 8)), build_h(2, 8));
}

TEST(Series, InverseIsTwoSided) {
  for (int n = 1; n <= 6; ++n) {
    auto x = build_x(n, 32), h = build_h(n, 32);
    EXPECT_EQ(compose(x, h), identity_series(32)) << n;
    EXPECT_EQ(compose(h, x), identity_series(32)) << n;
  }
}

TEST(Series, RationalInversionAgrees) {
  std::vector<Rat> c(9, Rat(0));
  c[1] = 1;
  c[2] = Rat(1, 2);
  auto g = comp_inverse(TruncSeries<Rat>(c));
  EXPECT_EQ(compose(TruncSeries<Rat>(c), g), TruncSeries<Rat>(std::vector<Rat>{0, 1, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(g[2], Rat(-1, 2));
}

TEST(Series, EvenOddSplit) {
  auto [a, b] = even_odd_split(build_x(1, 6));
  EXPECT_EQ(a.coeffs(), ints({0, 0, 1, 0, 1, 0, 1}));
  EXPECT_EQ(b.coeffs(), ints({0, 1, 0, 1, 0, 1, 0}));
  auto [e, o] = even_odd_split(identity_series(4));
  EXPECT_EQ(e.coeffs(), ints({0, 0, 0, 0, 0}));
  EXPECT_EQ(o, identity_series(4));
  EXPECT_EQ(e + o, identity_series(4));
}

TEST(Series, EvenOddRecursion) {
  for (int n = 1; n <= 5; ++n) {
    auto [a, b] = even_odd_split(build_x(n, 32));
    auto [a1, b1] = even_odd_split(build_x(n + 1, 32));
    auto k = ZSeries::constant(Int(1) << n, 32);
    EXPECT_EQ(a1, k * b * b);
    EXPECT_EQ(a1, ZSeries::constant(2, 32) * a + k * a * a);
    EXPECT_EQ(b1, b + k * a * b);
  }
}

TEST(Series, TruncationTakesMinimumPrecision) {
  auto s = identity_series(5) + identity_series(3);
  EXPECT_EQ(s.precision(), 3);
  EXPECT_EQ((identity_series(2) * identity_series(7)).precision(), 2);
  EXPECT_THROW(identity_series(2).truncate(3), DomainError);
}

TEST(Series, CompositionErrors) {
  EXPECT_THROW(compose(identity_series(3), ZSeries::constant(1, 3)), CompositionDomain);
  EXPECT_THROW(comp_inverse(ZSeries::constant(1, 3)), CompositionDomain);
  EXPECT_THROW(comp_inverse(ZSeries::monomial(2, 1, 3)), InversionError);
}

TEST(Series, ExtendedBinomial) {
  EXPECT_EQ(ext_binom(5, 2), 10);
  EXPECT_EQ(ext_binom(3, -1), 0);
  EXPECT_EQ(ext_binom(-1, 3), -1);
  EXPECT_EQ(ext_binom(-3, 2), 6);
  EXPECT_EQ(ext_binom(0, 0), 1);
  EXPECT_EQ(ext_binom(2, 5), 0);
}

TEST(Series, ExtendedBinomialPascalAndReflection) {
  for (long a = -20; a <= 20; ++a)
    for (long b = -20; b <= 20; ++b) {
      EXPECT_EQ(ext_binom(a, b), ext_binom(a - 1, b) + ext_binom(a - 1, b - 1)) << a << "," << b;
      if (a < 0 && b >= 0) EXPECT_EQ(ext_binom(a, b), (b % 2 ? -1 : 1) * ext_binom(b - a - 1, b));
    }
}

TEST(Series, Multinomial) {
  EXPECT_EQ(multinomial_C(2, 1, 1), 2);
  EXPECT_EQ(multinomial_C(3, 2, 1), 3);
  for (int d = 0; d <= 6; ++d) EXPECT_EQ(multinomial_C(d, 0, 0), 1);
  EXPECT_THROW(multinomial_C(2, 2, 1), DomainError);
}

TEST(Series, MultinomialParity) {
  for (int s = 0; s <= 16; ++s)
    for (int t = 0; t <= 16; ++t)
      for (int d = std::max(s, t); d <= s + t; ++d)
        EXPECT_EQ(multinomial_C(d, d - s, d - t) % 2 != 0, d == (s | t)) << s << "," << t << "," << d;
}

}  // namespace
}  // namespace gwinv
