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
#include <string>
#include <vector>

#include "gwinv/field.hpp"
#include "gwinv/series.hpp"

namespace gwinv {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t to_int64(const Int& x);

// Formal Z-combination sum n_a <a> over square classes, i.e. an element of
// the group ring Z[K*/K*^2]. GW(K) is its quotient; use gw_equal to compare.
class GwElement {
 public:
  explicit GwElement(Field f);

  static GwElement one(const Field& f);
  static GwElement of(const SquareClass& a, std::int64_t mult = 1);
  static GwElement diag(const Field& f, const std::vector<SquareClass>& entries);
  // <1> + <-1>.
  static GwElement hyperbolic(const Field& f);

  const Field& field() const { return f_; }
  std::int64_t coeff(std::uint32_t bits) const { return c_[bits]; }
  std::int64_t coeff(const SquareClass& a) const { return c_[a.bits()]; }
  const std::vector<std::int64_t>& raw() const { return c_; }
  void add_term(std::uint32_t bits, std::int64_t mult);

  std::int64_t dim() const;
  bool structurally_zero() const;
  // All multiplicities nonnegative: an actual diagonal form.
  bool is_form() const;
  std::string to_string() const;

  GwElement operator-() const;
  GwElement& operator+=(const GwElement& o);
  GwElement& operator-=(const GwElement& o);
  friend GwElement operator+(GwElement a, const GwElement& b) { return a += b; }
  friend GwElement operator-(GwElement a, const GwElement& b) { return a -= b; }
  friend GwElement operator*(const GwElement& a, const GwElement& b);
  friend GwElement operator*(std::int64_t k, const GwElement& a);
  // Multiplication by the one-dimensional form <a>.
  GwElement scaled(const SquareClass& a) const;

 private:
  Field f_;
  std::vector<std::int64_t> c_;  // indexed by square-class bits
};

template <>
struct RingTraits<GwElement> {
  static GwElement zero_like(const GwElement& x) { return GwElement(x.field()); }
  static GwElement one_like(const GwElement& x) { return GwElement::one(x.field()); }
  static bool is_zero(const GwElement& x) { return x.structurally_zero(); }
};

// Witt ring of the base: small integer codes.
//   C:            dim mod 2
//   R:            signature
//   F_q, q=3 (4): k for k<1> in Z/4
//   F_q, q=1 (4): bit0 = coefficient of <1>, bit1 = coefficient of <u>, in (Z/2)^2
namespace basew {
std::int64_t add(const FieldDescriptor& f, std::int64_t a, std::int64_t b);
std::int64_t neg(const FieldDescriptor& f, std::int64_t a);
std::int64_t mul(const FieldDescriptor& f, std::int64_t a, std::int64_t b);
std::int64_t from_int(const FieldDescriptor& f, std::int64_t k);
// Contribution of mult * <base class> where base_bit selects the non-square.
std::int64_t entry(const FieldDescriptor& f, bool base_bit, std::int64_t mult);
bool in_power(const FieldDescriptor& f, std::int64_t a, int j);
// Coefficient of the unique degree-j base monomial in e_j(a); needs in_power(a, j).
bool e_bit(const FieldDescriptor& f, std::int64_t a, int j);
}  // namespace basew

// Witt class in iterated Springer form: W(K) = sum over variable subsets S
// of W(base) <t_S>, stored as base codes indexed by the variable mask.
class WittClass {
 public:
  explicit WittClass(Field f);
  static WittClass one(const Field& f);
  static WittClass from_int(const Field& f, std::int64_t k);
  static WittClass from_int(const Field& f, const Int& k);

  const Field& field() const { return f_; }
  const std::vector<std::int64_t>& components() const { return w_; }
  std::int64_t component(std::uint32_t mask) const { return w_[mask]; }
  void set_component(std::uint32_t mask, std::int64_t code) { w_[mask] = code; }
  bool is_zero() const;
  // A form expression in the CLI grammar, "0" for the zero class.
  std::string to_string() const;

  WittClass operator-() const;
  friend WittClass operator+(const WittClass& a, const WittClass& b);
  friend WittClass operator-(const WittClass& a, const WittClass& b);
  friend WittClass operator*(const WittClass& a, const WittClass& b);
  friend bool operator==(const WittClass& a, const WittClass& b);

 private:
  Field f_;
  std::vector<std::int64_t> w_;
};

WittClass witt_canonical(const GwElement& x);
bool gw_equal(const GwElement& x, const GwElement& y);
// A GW representative with the given Witt class.
GwElement to_gw(const WittClass& q);

// <<a_1, ..., a_n>> = prod <1, -a_i>, dimension 2^n.
GwElement pfister(const std::vector<SquareClass>& args);
// prod (<1> - <a_i>), dimension 0.
GwElement gpfister(const std::vector<SquareClass>& args);
GwElement mul_forms(const GwElement& x, const GwElement& y);

// lambda_t(x) to degree D; group law for negative multiplicities.
TruncSeries<GwElement> lambda_series(const GwElement& x, int D);
GwElement lambda_power(int d, const GwElement& x);

// Coordinates v_T with q = sum_T <<t_T>> v_T, v_T in W(base).
std::vector<std::int64_t> pfister_coordinates(const WittClass& q);
bool is_in_In(const WittClass& q, int n);
bool is_in_In(const GwElement& x, int n);

// Dimension-zero lift; throws DomainError outside I.
GwElement hat_lift(const GwElement& x);
GwElement hat_lift(const WittClass& q);

// Second residue with respect to the top variable.
WittClass second_residue(const WittClass& q);

// form := term (('+'|'-') term)*, term := [int '*'] atom,
// atom := diag(sc, ...) | pf(sc, ...) | H. A bare integer k is k<1>; a leading
// sign is accepted.
GwElement parse_form(const Field& f, const std::string& text);

}  // namespace gwinv
