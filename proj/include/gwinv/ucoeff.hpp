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

#include "gwinv/series.hpp"
#include "gwinv/target.hpp"

namespace gwinv {

// Polynomial over F_2, bit j of the packed words is the coefficient of x^j.
class F2Poly {
 public:
  F2Poly() = default;
  static F2Poly monomial(int j);
  static F2Poly constant(bool c) { return c ? monomial(0) : F2Poly(); }

  bool coeff(int j) const;
  int degree() const;  // -1 for zero
  bool is_zero() const { return w_.empty(); }

  friend F2Poly operator+(const F2Poly& a, const F2Poly& b);
  friend F2Poly operator*(const F2Poly& a, const F2Poly& b);
  friend bool operator==(const F2Poly& a, const F2Poly& b) { return a.w_ == b.w_; }

 private:
  void trim();
  std::vector<std::uint64_t> w_;
};

// Coefficients in the subring generated by eps = {-1}: Z with eps = 2 for W,
// F_2[eps] for H.
class UCoeff {
 public:
  static UCoeff zero(Mode m);
  static UCoeff one(Mode m) { return from_int(m, 1); }
  static UCoeff from_int(Mode m, const Int& k);
  static UCoeff eps_pow(Mode m, int j);

  Mode mode() const { return m_; }
  bool is_zero() const;
  const Int& integer() const { return z_; }
  const F2Poly& poly() const { return p_; }
  std::string to_string() const;
  // Image under eps -> {-1} in A(K).
  AValue evaluate(const Field& f) const;

  UCoeff operator-() const;
  friend UCoeff operator+(const UCoeff& a, const UCoeff& b);
  friend UCoeff operator-(const UCoeff& a, const UCoeff& b);
  friend UCoeff operator*(const UCoeff& a, const UCoeff& b);
  friend bool operator==(const UCoeff& a, const UCoeff& b);

 private:
  explicit UCoeff(Mode m) : m_(m) {}
  Mode m_;
  Int z_ = 0;
  F2Poly p_;
};

}  // namespace gwinv
