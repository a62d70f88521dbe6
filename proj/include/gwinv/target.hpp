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

#include <string>
#include <variant>

#include "gwinv/cohomology.hpp"
#include "gwinv/witt.hpp"

namespace gwinv {

// The target functor A: the Witt ring (delta = 1) or mod-2 cohomology (delta = 0).
enum class Mode { W, H };

inline int delta(Mode m) { return m == Mode::W ? 1 : 0; }
const char* mode_name(Mode m);
Mode parse_mode(const std::string& s);

// A value of A(K): a Witt class or a cohomology class.
class AValue {
 public:
  explicit AValue(WittClass w) : v_(std::move(w)) {}
  explicit AValue(CohClass c) : v_(std::move(c)) {}

  static AValue zero(const Field& f, Mode m);
  static AValue one(const Field& f, Mode m);
  static AValue from_int(const Field& f, Mode m, const Int& k);
  // {a}: <<a>> in W, (a) in H.
  static AValue sym(const SquareClass& a, Mode m);
  // {-1}^j.
  static AValue eps_pow(const Field& f, Mode m, int j);
  // f_n of an n-fold Pfister form: the form itself in W, the symbol in H.
  static AValue pfister_value(const Field& f, const std::vector<SquareClass>& slots, Mode m);

  Mode mode() const { return std::holds_alternative<WittClass>(v_) ? Mode::W : Mode::H; }
  const Field& field() const;
  const WittClass& witt() const { return std::get<WittClass>(v_); }
  const CohClass& coh() const { return std::get<CohClass>(v_); }
  bool is_zero() const;
  std::string to_string() const;

  AValue operator-() const;
  friend AValue operator+(const AValue& a, const AValue& b);
  friend AValue operator-(const AValue& a, const AValue& b);
  friend AValue operator*(const AValue& a, const AValue& b);
  friend bool operator==(const AValue& a, const AValue& b);

 private:
  std::variant<WittClass, CohClass> v_;
};

// Residue along the top variable in either target.
AValue residue(const AValue& x);

}  // namespace gwinv
