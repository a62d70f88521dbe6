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
#include <set>
#include <string>
#include <vector>

#include "gwinv/field.hpp"
#include "gwinv/witt.hpp"

namespace gwinv {

// (t_S) cup b, where b is (-1)^j over R, (u) if j = 1 over F_q, 1 if j = 0.
struct Monomial {
  std::uint32_t vars = 0;
  int base_deg = 0;

  int grade() const;
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.vars == b.vars && a.base_deg == b.base_deg;
  }
  friend bool operator<(const Monomial& a, const Monomial& b);
};

// Element of H*(K, mu_2) as an F_2-combination of normalized monomials.
class CohClass {
 public:
  explicit CohClass(Field f);
  static CohClass one(const Field& f);
  static CohClass monomial(const Field& f, Monomial m);

  const Field& field() const { return f_; }
  const std::set<Monomial>& support() const { return s_; }
  bool is_zero() const { return s_.empty(); }
  bool is_homogeneous(int grade) const;
  std::string to_string() const;

  friend CohClass operator+(const CohClass& a, const CohClass& b);
  friend CohClass operator-(const CohClass& a, const CohClass& b) { return a + b; }
  CohClass operator-() const { return *this; }
  friend CohClass operator*(const CohClass& a, const CohClass& b);
  friend bool operator==(const CohClass& a, const CohClass& b);

 private:
  void toggle(const Monomial& m);
  Field f_;
  std::set<Monomial> s_;
};

CohClass cup(const CohClass& x, const CohClass& y);
// (a) in degree 1.
CohClass degree_one(const SquareClass& a);
// (a_1) cup ... cup (a_n); the unit for an empty list.
CohClass symbol(const Field& f, const std::vector<SquareClass>& args);
// (-1)^j.
CohClass minus_one_power(const Field& f, int j);

// Iterated Springer recursion; throws MembershipError outside I^n.
CohClass e_n(const WittClass& q, int n);

// Residue with respect to the top variable.
CohClass coh_residue(const CohClass& x);

}  // namespace gwinv
