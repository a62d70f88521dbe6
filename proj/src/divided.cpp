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

#include "gwinv/divided.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "gwinv/errors.hpp"

namespace gwinv {

const std::vector<std::vector<std::int64_t>>& h_power_table(int n, int D) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<std::vector<std::int64_t>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, D);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto h = build_h(n, D);
  std::vector<std::vector<std::int64_t>> tab(D + 1, std::vector<std::int64_t>(D + 1, 0));
  auto pw = ZSeries::constant(Int(1), D);
  for (int k = 0; k <= D; ++k) {
    for (int d = 0; d <= D; ++d) tab[k][d] = to_int64(pw[d]);
    pw = pw * h;
  }
  return cache.emplace(key, std::move(tab)).first->second;
}

TruncSeries<GwElement> pi_series(int n, int D, const GwElement& x) {
  if (n < 1) throw DomainError("pi_series: n must be positive");
  auto L = lambda_series(x, D);
  const auto& tab = h_power_table(n, D);
  std::vector<GwElement> out(D + 1, GwElement(x.field()));
  for (int d = 0; d <= D; ++d)
    for (int k = 0; k <= d; ++k)
      if (tab[k][d] && !L[k].structurally_zero()) out[d] += tab[k][d] * L[k];
  return TruncSeries<GwElement>(std::move(out));
}

GwElement eval_pi(int n, int d, const GwElement& x) { return pi_series(n, d, x)[d]; }

Int g_from_f_binom(int d, int k) {
  if (d == 0) return k == 0 ? 1 : 0;
  if (k < d / 2 + 1 || k > d) return 0;
  return ext_binom((d - 1) / 2, k - d / 2 - 1);
}

Int f_from_g_binom(int d, int k) {
  if (d == 0) return k == 0 ? 1 : 0;
  if (k < 1 || k > d) return 0;
  // The binomial reads binom(-1,-1) here; f^1 = g^1 fixes it to 1.
  if (d == 1) return 1;
  return ext_binom(d - (k + 1) / 2 - 1, k / 2 - 1);
}

std::vector<AValue> eval_f_all(int n, int D, const GwElement& q, Mode m) {
  if (n < 1) throw DomainError("eval_f: n must be positive");
  const auto& f = q.field();
  if (!is_in_In(q, n)) throw MembershipError("eval_f: argument is not in I^" + std::to_string(n));
  auto P = pi_series(n, D, hat_lift(q));
  std::vector<AValue> out;
  out.reserve(D + 1);
  for (int d = 0; d <= D; ++d) {
    auto w = witt_canonical(P[d]);
    if (!is_in_In(w, n * d)) throw ConsistencyError("pi_n^d left I^{nd}");
    out.push_back(m == Mode::W ? AValue(w) : AValue(e_n(w, n * d)));
  }
  (void)f;
  return out;
}

AValue eval_f(int n, int d, const GwElement& q, Mode m) { return eval_f_all(n, d, q, m)[d]; }

AValue eval_f(int n, int d, const WittClass& q, Mode m) { return eval_f(n, d, to_gw(q), m); }

std::vector<AValue> eval_g_all(int n, int D, const GwElement& q, Mode m) {
  auto fv = eval_f_all(n, D, q, m);
  const auto& f = q.field();
  std::vector<AValue> out;
  out.reserve(D + 1);
  for (int d = 0; d <= D; ++d) {
    AValue acc = AValue::zero(f, m);
    for (int k = 0; k <= d; ++k) {
      Int b = g_from_f_binom(d, k);
      if (b == 0) continue;
      acc = acc + AValue::from_int(f, m, b) * AValue::eps_pow(f, m, n * (d - k)) * fv[k];
    }
    out.push_back(acc);
  }
  return out;
}

AValue eval_g(int n, int d, const GwElement& q, Mode m) { return eval_g_all(n, d, q, m)[d]; }

std::vector<AValue> eval_sw_all(int D, const GwElement& x, Mode m) {
  const auto& f = x.field();
  std::vector<AValue> res(D + 1, AValue::zero(f, m));
  res[0] = AValue::one(f, m);
  const auto& c = x.raw();
  for (std::uint32_t b = 0; b < c.size(); ++b) {
    std::int64_t mult = c[b];
    if (!mult) continue;
    AValue s = AValue::sym(SquareClass(f, b), m);
    std::vector<AValue> pw{AValue::one(f, m)};
    for (int k = 1; k <= D; ++k) pw.push_back(pw.back() * s);
    std::vector<AValue> next(D + 1, AValue::zero(f, m));
    for (int k = 0; k <= D; ++k) {
      Int bk = ext_binom(mult, k);
      if (bk == 0) continue;
      AValue term = AValue::from_int(f, m, bk) * pw[k];
      for (int d = k; d <= D; ++d) next[d] = next[d] + term * res[d - k];
    }
    res = std::move(next);
  }
  return res;
}

AValue eval_sw(int d, const GwElement& x, Mode m) { return eval_sw_all(d, x, m)[d]; }

GwElement sw_from_lambda(int d, const GwElement& x) {
  if (!x.is_form()) throw DomainError("sw_from_lambda: argument must be a form");
  std::int64_t dim = x.dim();
  auto L = lambda_series(x, d);
  GwElement r(x.field());
  for (int k = 0; k <= d; ++k) {
    std::int64_t b = ext_binom64(dim - k, d - k);
    if (b) r += ((k % 2) ? -b : b) * L[k];
  }
  return r;
}

namespace {

AValue fixed_dim(int d, const GwElement& q, Mode m, bool g_basis) {
  if (!q.is_form()) throw DomainError("fixed-dimension expansion needs a form");
  std::int64_t dim = q.dim();
  if (dim % 2) throw DomainError("fixed-dimension expansion needs even dimension");
  long r = static_cast<long>(dim / 2);
  const auto& f = q.field();
  auto h = eval_sw_all(d, q, m);
  AValue acc = AValue::zero(f, m);
  for (int i = 0; i <= d; ++i) {
    long top = g_basis ? r - i - 1 + (d + 1) / 2 : r - i;
    Int b = ext_binom(top, d - i);
    if (b == 0) continue;
    if (i % 2) b = -b;
    acc = acc + AValue::from_int(f, m, b) * AValue::eps_pow(f, m, d - i) * h[i];
  }
  return acc;
}

}  // namespace

AValue eval_fixed_dim_f(int d, const GwElement& q, Mode m) { return fixed_dim(d, q, m, false); }
AValue eval_fixed_dim_g(int d, const GwElement& q, Mode m) { return fixed_dim(d, q, m, true); }

}  // namespace gwinv
