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

#include "gwinv/series.hpp"

#include <limits>

namespace gwinv {

ZSeries identity_series(int D) { return ZSeries::monomial(Int(1), 1, D); }

ZSeries build_x(int n, int D) {
  if (n < 1) throw DomainError("build_x: n must be positive");
  std::vector<Int> c(D + 1, 0);
  for (int d = 1; d <= D; ++d) c[d] = 1;
  ZSeries x(std::move(c));
  for (int k = 1; k < n; ++k) {
    Int two_pow = Int(1) << (k - 1);
    auto sq = x * x;
    std::vector<Int> v(D + 1);
    for (int d = 0; d <= D; ++d) v[d] = x[d] + two_pow * sq[d];
    x = ZSeries(std::move(v));
  }
  return x;
}

ZSeries build_h(int n, int D) {
  auto x = build_x(n, D);
  auto h = comp_inverse(x);
  auto t = identity_series(D);
  if (!(compose(x, h) == t) || !(compose(h, x) == t))
    throw ConsistencyError("build_h: h_n is not a two-sided inverse of x_n");
  return h;
}

ZSeries build_p(int n, int D) {
  if (n < 1) throw DomainError("build_p: n must be positive");
  std::vector<Int> c(D + 1, 0);
  if (D >= 1) c[1] = 1;
  if (D >= 2) c[2] = Int(1) << (n - 1);
  return ZSeries(std::move(c));
}

ZSeries catalan(int D) {
  std::vector<Int> c(D + 1, 0);
  c[0] = 1;
  for (int m = 0; m < D; ++m) {
    Int s = 0;
    for (int i = 0; i <= m; ++i) s += c[i] * c[m - i];
    c[m + 1] = s;
  }
  return ZSeries(std::move(c));
}

ZSeries p_inverse_catalan(int n, int D) {
  if (n < 1) throw DomainError("p_inverse_catalan: n must be positive");
  auto C = catalan(D);
  std::vector<Int> v(D + 1, 0);
  Int scale = -(Int(1) << (n - 1));
  Int pw = 1;
  for (int k = 0; k + 1 <= D; ++k) {
    v[k + 1] = C[k] * pw;
    pw *= scale;
  }
  return ZSeries(std::move(v));
}

Int ext_binom(long a, long b) {
  if (b < 0) return 0;
  if (a < 0) {
    Int r = ext_binom(b - a - 1, b);
    return (b % 2) ? Int(-r) : r;
  }
  if (b > a) return 0;
  b = std::min(b, a - b);
  Int r = 1;
  for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

std::int64_t ext_binom64(long a, long b) {
  Int r = ext_binom(a, b);
  if (r > std::numeric_limits<std::int64_t>::max() || r < std::numeric_limits<std::int64_t>::min())
    throw DomainError("ext_binom64: value exceeds 64 bits");
  return static_cast<std::int64_t>(r);
}

Int multinomial_C(long d, long p, long q) {
  if (p < 0 || q < 0 || p + q > d) throw DomainError("multinomial_C: need p, q >= 0 and p + q <= d");
  return ext_binom(d, p) * ext_binom(d - p, q);
}

}  // namespace gwinv
