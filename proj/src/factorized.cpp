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

#include "gwinv/factorized.hpp"

#include <optional>

#include "gwinv/divided.hpp"
#include "gwinv/errors.hpp"

namespace gwinv {

GwElement PfTerm::value() const {
  const auto& f = scale.field();
  GwElement p = slots.empty() ? GwElement::one(f) : pfister(slots);
  p = p.scaled(scale);
  return sign < 0 ? -p : p;
}

GwElement FactorizedForm::cofactor_form() const {
  GwElement q(field);
  for (const auto& t : cofactor) q += t.value();
  return q;
}

GwElement FactorizedForm::product() const {
  GwElement q = cofactor_form();
  return factor.empty() ? q : pfister(factor) * q;
}

void FactorizedForm::validate() const {
  if (r() > n) throw DomainError("factor longer than the level n");
  for (const auto& t : cofactor)
    if (static_cast<int>(t.slots.size()) < n - r()) throw DomainError("cofactor term outside I^{n-r}");
}

AValue delta_t_eval(const FactorizedForm& x, const SymbolicInvariant& alpha, int t) {
  x.validate();
  if (t < 0 || t > x.r()) throw DomainError("delta_t_eval: factor shorter than t");
  if (!alpha.is_normalized()) throw DomainError("delta_t_eval: invariant must be normalized");
  if (alpha.n() != x.n - t) throw DomainError("delta_t_eval: invariant must live on I^{n-t}");
  std::vector<SquareClass> head(x.factor.begin(), x.factor.begin() + t);
  std::vector<SquareClass> tail(x.factor.begin() + t, x.factor.end());
  GwElement rest = x.cofactor_form();
  if (!tail.empty()) rest = pfister(tail) * rest;
  return AValue::pfister_value(x.field, head, alpha.mode()) * evaluate(alpha, rest);
}

namespace {

// Certified square classes represented by <<a>> = <1,-a>.
std::vector<SquareClass> represented_by(const SquareClass& a) {
  const auto& f = a.field();
  auto one = SquareClass::one(f);
  std::vector<SquareClass> out{one, minus_one(f) * a};
  if (f->base == BaseKind::FiniteOdd && a.var_mask() == 0) out.emplace_back(f, 1u);
  std::vector<SquareClass> keep;
  for (const auto& c : out)
    if (represented_by_binary(c, a, one)) keep.push_back(c);
  return keep;
}

// A slot value c in every term with c certified represented by <<ab>> for
// b = -ac; returns b.
std::optional<SquareClass> common_slot_scalar(const FactorizedForm& x, Rng& rng) {
  const auto& a = x.factor[0];
  const auto& f = x.field;
  std::vector<SquareClass> candidates;
  if (!x.cofactor.empty() && !x.cofactor[0].slots.empty())
    for (const auto& c : x.cofactor[0].slots) {
      bool everywhere = true;
      for (const auto& t : x.cofactor) {
        bool has = false;
        for (const auto& s : t.slots) has = has || s == c;
        everywhere = everywhere && has;
      }
      if (everywhere && !c.is_one()) candidates.push_back(minus_one(f) * a * c);
    }
  // Over a finite base every unit is represented by a unit binary form.
  if (f->base == BaseKind::FiniteOdd && a.var_mask() == 0) {
    bool all_units = !x.cofactor.empty();
    for (const auto& t : x.cofactor) {
      bool has = false;
      for (const auto& s : t.slots) has = has || s.var_mask() == 0;
      all_units = all_units && has;
    }
    if (all_units) candidates.emplace_back(f, a.bits() ^ 1u);
  }
  if (candidates.empty()) return std::nullopt;
  return candidates[rng.below(candidates.size())];
}

FactorizedForm perturb_same_scalar(const FactorizedForm& x, Rng& rng) {
  const auto& f = x.field;
  auto reps = represented_by(x.factor[0]);
  FactorizedForm y = x;
  PfTerm t{rng.coin() ? 1 : -1, random_sc(f, rng), {}};
  t.slots.push_back(reps[rng.below(reps.size())]);
  int level = x.n - x.r();
  for (int i = 1; i < level; ++i) t.slots.push_back(random_sc(f, rng));
  y.cofactor.push_back(t);
  return y;
}

}  // namespace

std::vector<FactorizedForm> alt_factorizations(const FactorizedForm& x, std::size_t budget, Rng& rng) {
  x.validate();
  if (x.r() != 1) throw DomainError("alt_factorizations: factor length must be 1");
  std::vector<FactorizedForm> out{x};
  auto target = witt_canonical(x.product());
  std::size_t attempts = 0;
  while (out.size() < budget && attempts < 4 * budget) {
    ++attempts;
    const FactorizedForm& base = out[rng.below(out.size())];
    FactorizedForm y = base;
    if (rng.coin()) {
      auto b = common_slot_scalar(base, rng);
      if (!b) continue;
      y.factor[0] = *b;
    } else {
      y = perturb_same_scalar(base, rng);
    }
    if (!(witt_canonical(y.product()) == target))
      throw ConsistencyError("certified factorization move changed the Witt class");
    out.push_back(std::move(y));
  }
  return out;
}

bool lemma_factor_check(const SquareClass& a, const SquareClass& b,
                        const std::vector<std::pair<SquareClass, SquareClass>>& terms, int k) {
  if (k < 1) throw DomainError("lemma_factor_check: k must be positive");
  const auto& f = a.field();
  GwElement q(f);
  for (const auto& [x, c] : terms) {
    if (!represented_by_binary(c, a, b)) throw DomainError("lemma_factor_check: slot is not certified");
    q += gpfister({c}).scaled(x);
  }
  auto lk = lambda_power(k, q);
  return witt_canonical(pfister({a}) * lk) == witt_canonical(pfister({b}) * lk);
}

}  // namespace gwinv
