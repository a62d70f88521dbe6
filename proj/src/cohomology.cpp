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

#include "gwinv/cohomology.hpp"

#include <bit>
#include <tuple>

#include "gwinv/errors.hpp"

namespace gwinv {

int Monomial::grade() const { return std::popcount(vars) + base_deg; }

bool operator<(const Monomial& a, const Monomial& b) {
  return std::make_tuple(a.grade(), a.vars, a.base_deg) < std::make_tuple(b.grade(), b.vars, b.base_deg);
}

namespace {

bool valid(const FieldDescriptor& f, const Monomial& m) {
  if (m.base_deg < 0) return false;
  switch (f.base) {
    case BaseKind::QuadClosed: return m.base_deg == 0;
    case BaseKind::FiniteOdd: return m.base_deg <= 1;
    case BaseKind::RealClosed: return true;
  }
  return false;
}

// Product of two normalized monomials; false if it vanishes.
// Uses (t) cup (t) = (-1) cup (t).
bool mono_mul(const FieldDescriptor& f, const Monomial& a, const Monomial& b, Monomial& out) {
  std::uint32_t inter = a.vars & b.vars;
  int k = std::popcount(inter);
  out.vars = a.vars | b.vars;
  switch (f.base) {
    case BaseKind::RealClosed: out.base_deg = a.base_deg + b.base_deg + k; return true;
    case BaseKind::QuadClosed:
      out.base_deg = 0;
      return k == 0;
    case BaseKind::FiniteOdd: {
      bool minus_one_is_u = f.q % 4 == 3;
      if (k > 0 && !minus_one_is_u) return false;
      out.base_deg = a.base_deg + b.base_deg + k;
      return out.base_deg <= 1;
    }
  }
  return false;
}

}  // namespace

CohClass::CohClass(Field f) : f_(std::move(f)) {}

CohClass CohClass::one(const Field& f) { return monomial(f, Monomial{}); }

CohClass CohClass::monomial(const Field& f, Monomial m) {
  CohClass x(f);
  if (m.vars >> f->depth()) throw DomainError("monomial uses unknown variables");
  if (valid(*f, m)) x.s_.insert(m);
  return x;
}

void CohClass::toggle(const Monomial& m) {
  auto it = s_.find(m);
  if (it == s_.end())
    s_.insert(m);
  else
    s_.erase(it);
}

bool CohClass::is_homogeneous(int grade) const {
  for (const auto& m : s_)
    if (m.grade() != grade) return false;
  return true;
}

std::string CohClass::to_string() const {
  if (s_.empty()) return "0";
  std::string out;
  for (const auto& m : s_) {
    std::vector<std::string> parts;
    if (m.base_deg > 0) {
      if (f_->base == BaseKind::FiniteOdd)
        parts.push_back("(u)");
      else
        parts.push_back(m.base_deg == 1 ? "(-1)" : "(-1)^" + std::to_string(m.base_deg));
    }
    for (int i = 0; i < f_->depth(); ++i)
      if (m.vars >> i & 1u) parts.push_back("(" + f_->vars[i] + ")");
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "." : "") + parts[i];
    if (s.empty()) s = "1";
    out += (out.empty() ? "" : " + ") + s;
  }
  return out;
}

CohClass operator+(const CohClass& a, const CohClass& b) {
  require_same_field(a.f_, b.f_, "cohomology addition");
  CohClass r = a;
  for (const auto& m : b.s_) r.toggle(m);
  return r;
}

CohClass operator*(const CohClass& a, const CohClass& b) {
  require_same_field(a.f_, b.f_, "cup product");
  CohClass r(a.f_);
  Monomial m;
  for (const auto& x : a.s_)
    for (const auto& y : b.s_)
      if (mono_mul(*a.f_, x, y, m)) r.toggle(m);
  return r;
}

bool operator==(const CohClass& a, const CohClass& b) { return same_field(a.f_, b.f_) && a.s_ == b.s_; }

CohClass cup(const CohClass& x, const CohClass& y) { return x * y; }

CohClass degree_one(const SquareClass& a) {
  const auto& f = a.field();
  CohClass r(f);
  if (a.base_bit()) r = r + CohClass::monomial(f, Monomial{0, 1});
  for (int i = 0; i < f->depth(); ++i)
    if (a.var_mask() >> i & 1u) r = r + CohClass::monomial(f, Monomial{1u << i, 0});
  return r;
}

CohClass symbol(const Field& f, const std::vector<SquareClass>& args) {
  CohClass r = CohClass::one(f);
  for (const auto& a : args) {
    require_same_field(f, a.field(), "symbol");
    r = r * degree_one(a);
  }
  return r;
}

CohClass minus_one_power(const Field& f, int j) {
  CohClass r = CohClass::one(f);
  CohClass m = degree_one(minus_one(f));
  for (int i = 0; i < j; ++i) r = r * m;
  return r;
}

CohClass e_n(const WittClass& q, int n) {
  if (n < 0) throw DomainError("e_n: negative degree");
  if (!is_in_In(q, n)) throw MembershipError("e_n: class is not in I^" + std::to_string(n));
  const auto& f = q.field();
  auto v = pfister_coordinates(q);
  CohClass r(f);
  for (std::uint32_t T = 0; T < v.size(); ++T) {
    int j = n - std::popcount(T);
    if (j < 0 || !v[T]) continue;
    if (basew::e_bit(*f, v[T], j)) r = r + CohClass::monomial(f, Monomial{T, j});
  }
  return r;
}

CohClass coh_residue(const CohClass& x) {
  const auto& f = x.field();
  auto rf = residue_field(f);
  std::uint32_t top = 1u << (f->depth() - 1);
  CohClass r(rf);
  for (const auto& m : x.support())
    if (m.vars & top) r = r + CohClass::monomial(rf, Monomial{m.vars ^ top, m.base_deg});
  return r;
}

}  // namespace gwinv
