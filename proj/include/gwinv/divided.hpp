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

#include <cstdint>
#include <vector>

#include "gwinv/series.hpp"
#include "gwinv/target.hpp"
#include "gwinv/witt.hpp"

namespace gwinv {

// [t^d] h_n(t)^k for 0 <= k, d <= D, memoized per (n, D).
const std::vector<std::vector<std::int64_t>>& h_power_table(int n, int D);

// (pi_n)_t(x) = lambda_{h_n(t)}(x) to degree D.
TruncSeries<GwElement> pi_series(int n, int D, const GwElement& x);
GwElement eval_pi(int n, int d, const GwElement& x);

// Transition binomials: with e = {-1},
//   g_n^d = sum_k g_from_f_binom(d,k) e^{n(d-k)} f_n^k
//   f_n^d = sum_k (-1)^{d-k} f_from_g_binom(d,k) e^{n(d-k)} g_n^k
Int g_from_f_binom(int d, int k);
Int f_from_g_binom(int d, int k);

// f_n^d(q) for d = 0..D. q is any GW representative of a class in I^n.
std::vector<AValue> eval_f_all(int n, int D, const GwElement& q, Mode m);
AValue eval_f(int n, int d, const GwElement& q, Mode m);
AValue eval_f(int n, int d, const WittClass& q, Mode m);

// g_n^d(q) for d = 0..D, through the f-basis transition.
std::vector<AValue> eval_g_all(int n, int D, const GwElement& q, Mode m);
AValue eval_g(int n, int d, const GwElement& q, Mode m);

// Coefficients of h_t(x) = prod (1 + {a} t)^{n_a} up to degree D.
std::vector<AValue> eval_sw_all(int D, const GwElement& x, Mode m);
AValue eval_sw(int d, const GwElement& x, Mode m);

// P^d_dim(x) = sum_k (-1)^k binom(dim-k, d-k) lambda^k(x) in GW, for a form x.
GwElement sw_from_lambda(int d, const GwElement& x);

// f_1^d or g_1^d of an even-dimensional form through its h-expansion.
AValue eval_fixed_dim_f(int d, const GwElement& q, Mode m);
AValue eval_fixed_dim_g(int d, const GwElement& q, Mode m);

}  // namespace gwinv
