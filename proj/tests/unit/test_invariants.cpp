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

#include "gwinv/divided.hpp"
#include "gwinv/errors.hpp"
#include "gwinv/invariants.hpp"
#include "gwinv/sampling.hpp"
#include "printers.hpp"

namespace gwinv {
namespace {

SymbolicInvariant fb(int n, Mode m, int d) { return SymbolicInvariant::basis_element(n, m, Basis::F, d); }
SymbolicInvariant gb(int n, Mode m, int d) { return SymbolicInvariant::basis_element(n, m, Basis::G, d); }
UCoeff k(Mode m, long v) { return UCoeff::from_int(m, v); }
UCoeff e(Mode m, int j) { return UCoeff::eps_pow(m, j); }

TEST(UCoeff, Arithmetic) {
  EXPECT_EQ(UCoeff::eps_pow(Mode::W, 3), k(Mode::W, 8));
  EXPECT_TRUE((k(Mode::H, 1) + k(Mode::H, 1)).is_zero());
  auto x1 = e(Mode::H, 1) + k(Mode::H, 1);
  EXPECT_EQ(x1 * x1, e(Mode::H, 2) + k(Mode::H, 1));
  EXPECT_EQ((x1 * x1).to_string(), "eps^2 + 1");
  EXPECT_EQ(e(Mode::H, 70) * e(Mode::H, 70), e(Mode::H, 140));
  EXPECT_EQ(F2Poly::monomial(100).degree(), 100);
  auto r = parse_field("R");
  EXPECT_EQ(e(Mode::W, 2).evaluate(r), AValue::from_int(r, Mode::W, 4));
  EXPECT_EQ(e(Mode::H, 2).evaluate(r), AValue::eps_pow(r, Mode::H, 2));
  EXPECT_THROW(k(Mode::W, 1) + k(Mode::H, 1), RingMismatch);
}

TEST(Invariants, ShiftExamples) {
  for (Mode m : {Mode::W, Mode::H})
    for (int n = 1; n <= 3; ++n) {
      for (int d = 0; d <= 6; ++d) EXPECT_EQ(phi(fb(n, m, d + 1), 1), fb(n, m, d));
      EXPECT_TRUE(phi(fb(n, m, 0), 1).is_zero());
      EXPECT_TRUE(phi(fb(n, m, 0), -1).is_zero());
      EXPECT_EQ(phi(fb(n, m, 2), -1), fb(n, m, 1) - e(m, n) * fb(n, m, 0));
      for (int j = 0; j <= 3; ++j) {
        EXPECT_EQ(phi(gb(n, m, 2 * j + 1), -1), gb(n, m, 2 * j));
        EXPECT_EQ(phi(gb(n, m, 2 * j + 2), 1), gb(n, m, 2 * j + 1));
        EXPECT_EQ(phi(gb(n, m, 2 * j + 2), -1), gb(n, m, 2 * j + 1) - e(m, n) * gb(n, m, 2 * j));
        EXPECT_EQ(phi(phi(gb(n, m, j + 2), 1), -1), gb(n, m, j));
      }
    }
}

TEST(Invariants, ProductExamples) {
  EXPECT_EQ(product(fb(1, Mode::W, 1), fb(1, Mode::W, 1)), e(Mode::W, 1) * fb(1, Mode::W, 1) + k(Mode::W, 2) * fb(1, Mode::W, 2));
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(product(fb(n, Mode::H, 1), fb(n, Mode::H, 1)), e(Mode::H, n) * fb(n, Mode::H, 1));
  // Over a quadratically closed tower eps vanishes: f^s f^t = f^{s+t} or 0.
  auto f = parse_field("C((t1))((t2))((t3))");
  Rng rng(8);
  for (Mode m : {Mode::W, Mode::H})
    for (int s = 0; s <= 3; ++s)
      for (int t = 0; t <= 3; ++t) {
        auto q = random_In(f, 1, 3, rng);
        AValue want = (s & t) ? AValue::zero(f, m) : evaluate(fb(1, m, s + t), q);
        EXPECT_EQ(evaluate(product(fb(1, m, s), fb(1, m, t)), q), want);
      }
}

TEST(Invariants, BasisChange) {
  for (Mode m : {Mode::W, Mode::H})
    for (int n = 1; n <= 3; ++n) {
      EXPECT_EQ(to_basis(gb(n, m, 1), Basis::F).coeffs(), fb(n, m, 1).coeffs());
      EXPECT_EQ(to_basis(gb(n, m, 3), Basis::F).coeffs(), (fb(n, m, 3) + e(m, n) * fb(n, m, 2)).coeffs());
    }
  Rng rng(10);
  for (int i = 0; i < 100; ++i) {
    Mode m = rng.coin() ? Mode::W : Mode::H;
    SymbolicInvariant a(rng.range(1, 3), m, rng.coin() ? Basis::F : Basis::G);
    for (int d = 0; d <= 8; ++d)
      if (rng.coin()) a.add(d, m == Mode::W ? k(m, rng.range(-5, 5)) : e(m, rng.range(0, 3)));
    EXPECT_EQ(to_basis(change_basis(a), a.basis()).coeffs(), a.coeffs());
  }
}

TEST(Invariants, SimilitudeExamples) {
  for (int n = 1; n <= 3; ++n)
    for (int j = 1; j <= 3; ++j) {
      for (Mode m : {Mode::W, Mode::H}) EXPECT_EQ(psi_tilde(gb(n, m, 2 * j)), e(m, n - 1) * gb(n, m, 2 * j - 1));
      EXPECT_EQ(psi_tilde(gb(n, Mode::W, 2 * j + 1)), k(Mode::W, -1) * gb(n, Mode::W, 2 * j + 1));
      EXPECT_TRUE(psi_tilde(gb(n, Mode::H, 2 * j + 1)).is_zero());
    }
  for (Mode m : {Mode::W, Mode::H})
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 8; ++d) {
        auto p = psi_tilde(fb(n, m, d));
        EXPECT_EQ(psi_tilde(p), k(m, -delta(m)) * p);
        EXPECT_EQ(psi_tilde_f_closed_form(fb(n, m, d)), p) << mode_name(m) << " n=" << n << " d=" << d;
      }
}

TEST(Invariants, RestrictionExamples) {
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(restrict(fb(1, Mode::H, 2 * d)), fb(2, Mode::H, d));
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 7; d += 2) EXPECT_TRUE(restrict(fb(n, Mode::H, d)).is_zero());
  EXPECT_EQ(restrict(fb(1, Mode::W, 2)), fb(2, Mode::W, 1) + fb(2, Mode::W, 2));
  EXPECT_EQ(restrict(fb(1, Mode::W, 1)), fb(2, Mode::W, 1));
}

TEST(Invariants, OmegaExamples) {
  for (Mode m : {Mode::W, Mode::H})
    for (int n = 2; n <= 4; ++n)
      for (int t = 0; t < n; ++t) {
        EXPECT_EQ(omega_t(fb(n, m, 1), t), fb(n - t, m, 1));
        auto c = SymbolicInvariant::constant(n, m, Basis::F, k(m, 3));
        EXPECT_EQ(omega_t(c, t).coeffs(), c.coeffs());
      }
  EXPECT_EQ(omega_t(fb(3, Mode::W, 2), 1), e(Mode::W, 1) * fb(2, Mode::W, 2));
  EXPECT_THROW(omega_t(fb(2, Mode::W, 2), 2), DomainError);
}

TEST(Invariants, EvaluateAndExtract) {
  auto f = parse_field("R((t1))");
  auto q = parse_form(f, "pf(t1) - pf(-1)");
  for (Mode m : {Mode::W, Mode::H}) {
    EXPECT_EQ(evaluate(fb(1, m, 0), q), AValue::one(f, m));
    EXPECT_EQ(evaluate(gb(1, m, 3), q), eval_g(1, 3, q, m));
    auto a = parse_invariant("3*g[1,0] + g[1,2] + eps*g[1,5]", m);
    auto c = extract_coefficients(a, 6);
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(c[d], to_basis(a, Basis::G).coeff(d)) << d;
    EXPECT_THROW(evaluate(fb(2, m, 1), q), MembershipError);
  }
}

TEST(Invariants, KernelOfShifts) {
  for (Mode m : {Mode::W, Mode::H}) {
    auto c = SymbolicInvariant::constant(2, m, Basis::G, k(m, 1));
    EXPECT_TRUE(phi(c, 1).is_zero());
    EXPECT_TRUE(phi(c, -1).is_zero());
    EXPECT_FALSE(phi(c + gb(2, m, 4), 1).is_zero());
  }
}

TEST(Invariants, ParseLiterals) {
  auto a = parse_invariant("g[2,3] + eps^2*f[2,1]", Mode::H);
  EXPECT_EQ(a.basis(), Basis::G);
  EXPECT_EQ(a, gb(2, Mode::H, 3) + e(Mode::H, 2) * fb(2, Mode::H, 1));
  EXPECT_EQ(a.to_string(), "eps^2*g[2,1] + g[2,3]");
  auto w = parse_invariant("2*(f[1,1] + 1)*f[1,1] - eps", Mode::W);
  EXPECT_EQ(w, k(Mode::W, 2) * product(fb(1, Mode::W, 1) + fb(1, Mode::W, 0), fb(1, Mode::W, 1)) -
                   k(Mode::W, 2) * fb(1, Mode::W, 0));
  EXPECT_EQ(parse_invariant("3", Mode::W).n(), 1);
  for (const char* bad : {"", "f[1]", "f[0,1]", "f[1,-1]", "h[1,1]", "f[1,1] +", "(f[1,1]", "eps^"})
    EXPECT_THROW(parse_invariant(bad, Mode::W), ParseError) << bad;
  EXPECT_THROW(parse_invariant("f[1,1] + f[2,1]", Mode::W), RingMismatch);
}

}  // namespace
}  // namespace gwinv
