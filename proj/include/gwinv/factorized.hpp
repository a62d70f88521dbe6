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

#include <cstddef>
#include <utility>
#include <vector>

#include "gwinv/invariants.hpp"
#include "gwinv/sampling.hpp"
#include "gwinv/target.hpp"
#include "gwinv/witt.hpp"

namespace gwinv {

// sign * <scale> * <<slots>>; no slots means the one-dimensional <scale>.
struct PfTerm {
  int sign = 1;
  SquareClass scale;
  std::vector<SquareClass> slots;

  GwElement value() const;
};

// phi * q with phi = <<factor>> an r-fold Pfister form and q in I^{n-r}
// given as a sum of (n-r)-fold Pfister terms.
struct FactorizedForm {
  Field field;
  int n = 0;
  std::vector<SquareClass> factor;
  std::vector<PfTerm> cofactor;

  int r() const { return static_cast<int>(factor.size()); }
  GwElement cofactor_form() const;
  GwElement product() const;
  // Throws DomainError unless every term lies in I^{n-r}.
  void validate() const;
};

// f_t(first t factor slots) * alpha(<<remaining slots>> q), with alpha a
// normalized invariant of I^{n-t}.
AValue delta_t_eval(const FactorizedForm& x, const SymbolicInvariant& alpha, int t);

// Factorizations (b; q') of the Witt class of x = (a; q), r = 1, reached by
// the certified moves: q' = q + <<c>> q0 with c represented by <<a>>, and
// a -> b when every cofactor term carries a slot represented by <<ab>>.
// The first entry is x itself.
std::vector<FactorizedForm> alt_factorizations(const FactorizedForm& x, std::size_t budget, Rng& rng);

// <<a>> lambda^k(q) == <<b>> lambda^k(q) in W for q = sum <x_i> <<c_i>>^,
// each c_i certified represented by <<ab>>, and k >= 1.
bool lemma_factor_check(const SquareClass& a, const SquareClass& b,
                        const std::vector<std::pair<SquareClass, SquareClass>>& terms, int k);

}  // namespace gwinv
