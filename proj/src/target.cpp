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

#include "gwinv/target.hpp"

#include "gwinv/errors.hpp"

namespace gwinv {

const char* mode_name(Mode m) { return m == Mode::W ? "W" : "H"; }

Mode parse_mode(const std::string& s) {
  if (s == "W") return Mode::W;
  if (s == "H") return Mode::H;
  throw ParseError("mode must be W or H, got '" + s + "'");
}

AValue AValue::zero(const Field& f, Mode m) {
  return m == Mode::W ? AValue(WittClass(f)) : AValue(CohClass(f));
}

AValue AValue::one(const Field& f, Mode m) {
  return m == Mode::W ? AValue(WittClass::one(f)) : AValue(CohClass::one(f));
}

AValue AValue::from_int(const Field& f, Mode m, const Int& k) {
  if (m == Mode::W) return AValue(WittClass::from_int(f, k));
  return (k % 2 != 0) ? one(f, m) : zero(f, m);
}

AValue AValue::sym(const SquareClass& a, Mode m) {
  if (m == Mode::W) return AValue(witt_canonical(pfister({a})));
  return AValue(degree_one(a));
}

AValue AValue::eps_pow(const Field& f, Mode m, int j) {
  if (j < 0) throw DomainError("negative power of {-1}");
  if (m == Mode::H) return AValue(minus_one_power(f, j));
  // <<-1>> = <1,1> = 2 in W(K).
  if (j >= 62 && f->base == BaseKind::RealClosed) throw DomainError("power of {-1} exceeds 64 bits");
  if (j >= 62) return zero(f, m);  // 2^j vanishes in the torsion Witt rings
  return AValue(WittClass::from_int(f, std::int64_t(1) << j));
}

AValue AValue::pfister_value(const Field& f, const std::vector<SquareClass>& slots, Mode m) {
  if (slots.empty()) return one(f, m);
  if (m == Mode::W) return AValue(witt_canonical(pfister(slots)));
  return AValue(symbol(f, slots));
}

const Field& AValue::field() const {
  return mode() == Mode::W ? witt().field() : coh().field();
}

bool AValue::is_zero() const { return mode() == Mode::W ? witt().is_zero() : coh().is_zero(); }

std::string AValue::to_string() const { return mode() == Mode::W ? witt().to_string() : coh().to_string(); }

namespace {
void require_same_mode(const AValue& a, const AValue& b) {
  if (a.mode() != b.mode()) throw RingMismatch("values in different targets");
}
}  // namespace

AValue AValue::operator-() const { return mode() == Mode::W ? AValue(-witt()) : *this; }

AValue operator+(const AValue& a, const AValue& b) {
  require_same_mode(a, b);
  return a.mode() == Mode::W ? AValue(a.witt() + b.witt()) : AValue(a.coh() + b.coh());
}

AValue operator-(const AValue& a, const AValue& b) {
  require_same_mode(a, b);
  return a.mode() == Mode::W ? AValue(a.witt() - b.witt()) : AValue(a.coh() + b.coh());
}

AValue operator*(const AValue& a, const AValue& b) {
  require_same_mode(a, b);
  return a.mode() == Mode::W ? AValue(a.witt() * b.witt()) : AValue(a.coh() * b.coh());
}

bool operator==(const AValue& a, const AValue& b) {
  if (a.mode() != b.mode()) return false;
  return a.mode() == Mode::W ? a.witt() == b.witt() : a.coh() == b.coh();
}

AValue residue(const AValue& x) {
  return x.mode() == Mode::W ? AValue(second_residue(x.witt())) : AValue(coh_residue(x.coh()));
}

}  // namespace gwinv
