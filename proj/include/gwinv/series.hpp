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

#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gwinv/errors.hpp"

namespace gwinv {

using Int = boost::multiprecision::cpp_int;

// Ring plumbing for series coefficients. Rings whose zero depends on
// runtime data (a field) build it from a prototype element.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Int> {
  static Int zero_like(const Int&) { return 0; }
  static Int one_like(const Int&) { return 1; }
  static bool is_zero(const Int& x) { return x == 0; }
  static Int unit_inverse(const Int& x) {
    if (x == 1 || x == -1) return x;
    throw InversionError("linear coefficient is not a unit in Z");
  }
};

using Rat = boost::multiprecision::cpp_rational;

template <>
struct RingTraits<Rat> {
  static Rat zero_like(const Rat&) { return 0; }
  static Rat one_like(const Rat&) { return 1; }
  static bool is_zero(const Rat& x) { return x == 0; }
  static Rat unit_inverse(const Rat& x) {
    if (x == 0) throw InversionError("linear coefficient is zero");
    return Rat(1) / x;
  }
};

// Power series truncated at degree D. Coefficients of degree > D are unknown.
template <class R>
class TruncSeries {
 public:
  using Traits = RingTraits<R>;

  explicit TruncSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw DomainError("series needs at least the constant coefficient");
  }

  static TruncSeries constant(const R& c, int D) {
    std::vector<R> v(D + 1, Traits::zero_like(c));
    v[0] = c;
    return TruncSeries(std::move(v));
  }

  // c * t^k at precision D (zero if k > D).
  static TruncSeries monomial(const R& c, int k, int D) {
    std::vector<R> v(D + 1, Traits::zero_like(c));
    if (k <= D) v[k] = c;
    return TruncSeries(std::move(v));
  }

  int precision() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int d) const { return c_.at(d); }
  const std::vector<R>& coeffs() const { return c_; }
  R zero() const { return Traits::zero_like(c_[0]); }

  TruncSeries truncate(int D) const {
    if (D > precision()) throw DomainError("cannot raise precision by truncation");
    return TruncSeries(std::vector<R>(c_.begin(), c_.begin() + D + 1));
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    int D = std::min(a.precision(), b.precision());
    std::vector<R> v;
    v.reserve(D + 1);
    for (int i = 0; i <= D; ++i) v.push_back(a.c_[i] + b.c_[i]);
    return TruncSeries(std::move(v));
  }

  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    int D = std::min(a.precision(), b.precision());
    std::vector<R> v;
    v.reserve(D + 1);
    for (int i = 0; i <= D; ++i) v.push_back(a.c_[i] - b.c_[i]);
    return TruncSeries(std::move(v));
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    int D = std::min(a.precision(), b.precision());
    std::vector<R> v(D + 1, a.zero());
    for (int i = 0; i <= D; ++i) {
      if (Traits::is_zero(a.c_[i])) continue;
      for (int j = 0; i + j <= D; ++j) {
        if (Traits::is_zero(b.c_[j])) continue;
        v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return TruncSeries(std::move(v));
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.c_ == b.c_;
  }

 private:
  std::vector<R> c_;  // size D+1
};

// outer(inner) by Horner evaluation; inner must have zero constant term.
template <class R>
TruncSeries<R> compose(const TruncSeries<R>& outer, const TruncSeries<R>& inner) {
  using Tr = RingTraits<R>;
  if (!Tr::is_zero(inner[0]))
    throw CompositionDomain("inner series has nonzero constant term");
  int D = std::min(outer.precision(), inner.precision());
  auto in = inner.truncate(D);
  auto res = TruncSeries<R>::constant(outer[D], D);
  for (int k = D - 1; k >= 0; --k)
    res = res * in + TruncSeries<R>::constant(outer[k], D);
  return res;
}

// g with f(g) = g(f) = t, solved one degree at a time.
template <class R>
TruncSeries<R> comp_inverse(const TruncSeries<R>& f) {
  using Tr = RingTraits<R>;
  if (!Tr::is_zero(f[0])) throw CompositionDomain("series to invert has nonzero constant term");
  int D = f.precision();
  std::vector<R> g(D + 1, f.zero());
  if (D == 0) return TruncSeries<R>(g);
  R inv = Tr::unit_inverse(f[1]);
  g[1] = inv;
  for (int k = 2; k <= D; ++k) {
    // With g_k = 0 the degree-k coefficient of f(g) is f_1 g_k short of zero.
    auto val = compose(f.truncate(k), TruncSeries<R>(std::vector<R>(g.begin(), g.begin() + k + 1)))[k];
    g[k] = f.zero() - val * inv;
  }
  return TruncSeries<R>(std::move(g));
}

template <class R>
std::pair<TruncSeries<R>, TruncSeries<R>> even_odd_split(const TruncSeries<R>& f) {
  std::vector<R> ev(f.coeffs()), od(f.coeffs());
  for (int d = 0; d <= f.precision(); ++d) (d % 2 ? ev : od)[d] = f.zero();
  return {TruncSeries<R>(std::move(ev)), TruncSeries<R>(std::move(od))};
}

using ZSeries = TruncSeries<Int>;

// The series t at precision D.
ZSeries identity_series(int D);

// x_1 = t/(1-t), x_{k+1} = x_k + 2^{k-1} x_k^2.
ZSeries build_x(int n, int D);

// Compositional inverse of x_n; checked against x_n before returning.
ZSeries build_h(int n, int D);

// p_n = t + 2^{n-1} t^2.
ZSeries build_p(int n, int D);

// Catalan generating function, C_0 = 1, C_{m+1} = sum C_i C_{m-i}.
ZSeries catalan(int D);

// t C(-2^{n-1} t), the compositional inverse of p_n.
ZSeries p_inverse_catalan(int n, int D);

// Binomial coefficient extended to all integers by Pascal's rule.
Int ext_binom(long a, long b);
std::int64_t ext_binom64(long a, long b);

// d! / (p! q! (d-p-q)!).
Int multinomial_C(long d, long p, long q);

}  // namespace gwinv
