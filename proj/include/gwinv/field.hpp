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
#include <memory>
#include <string>
#include <vector>

namespace gwinv {

enum class BaseKind { QuadClosed, RealClosed, FiniteOdd };

// Iterated Laurent tower base((t1))...((tm)) over a base whose square
// classes are known. Characteristic 2 is not representable.
struct FieldDescriptor {
  BaseKind base = BaseKind::QuadClosed;
  int q = 0;  // odd prime power, FiniteOdd only
  std::vector<std::string> vars;

  int depth() const { return static_cast<int>(vars.size()); }
  // Square-class bit 0 is the base bit (sign over R, u over F_q).
  int class_bits() const { return depth() + 1; }
  std::uint32_t class_count() const { return 1u << class_bits(); }
  std::string to_string() const;
};

bool operator==(const FieldDescriptor& a, const FieldDescriptor& b);

using Field = std::shared_ptr<const FieldDescriptor>;

constexpr int kMaxDepth = 12;

Field make_field(BaseKind base, int q, std::vector<std::string> vars);
// Grammar: C | R | F<q>, followed by zero or more ((name)).
Field parse_field(const std::string& text);
// The tower with the top variable removed.
Field residue_field(const Field& f);
bool same_field(const Field& a, const Field& b);
void require_same_field(const Field& a, const Field& b, const char* what);

// A monomial a = s * u^e * t_1^{e_1} ... t_m^{e_m} up to squares.
class SquareClass {
 public:
  SquareClass(Field f, std::uint32_t bits);

  static SquareClass one(const Field& f) { return SquareClass(f, 0); }

  const Field& field() const { return f_; }
  std::uint32_t bits() const { return bits_; }
  bool base_bit() const { return bits_ & 1u; }
  std::uint32_t var_mask() const { return bits_ >> 1; }
  bool is_one() const { return bits_ == 0; }
  std::string to_string() const;

  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.bits_ == b.bits_ && same_field(a.f_, b.f_);
  }
  friend bool operator<(const SquareClass& a, const SquareClass& b) { return a.bits_ < b.bits_; }

 private:
  Field f_;
  std::uint32_t bits_;
};

SquareClass sc_mul(const SquareClass& a, const SquareClass& b);
inline SquareClass operator*(const SquareClass& a, const SquareClass& b) { return sc_mul(a, b); }

SquareClass minus_one(const Field& f);
SquareClass var_class(const Field& f, int i);
// Grammar: optional '-', then '1' or '*'-separated generators from u and the variable names.
SquareClass parse_sc(const Field& f, const std::string& text);

// All square classes, ordered by bit pattern. Depth at most 6.
std::vector<SquareClass> enumerate_sc(const Field& f);

// Sound but incomplete: true only when c is certified to be represented by <1, -ab>.
bool represented_by_binary(const SquareClass& c, const SquareClass& a, const SquareClass& b);

}  // namespace gwinv
