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

#include "gwinv/ucoeff.hpp"

#include <bit>

#include "gwinv/errors.hpp"

namespace gwinv {

F2Poly F2Poly::monomial(int j) {
  if (j < 0) throw DomainError("negative exponent");
  F2Poly p;
  p.w_.assign(j / 64 + 1, 0);
  p.w_[j / 64] = std::uint64_t(1) << (j % 64);
  return p;
}

bool F2Poly::coeff(int j) const {
  if (j < 0 || j / 64 >= static_cast<int>(w_.size())) return false;
  return w_[j / 64] >> (j % 64) & 1u;
}

int F2Poly::degree() const {
  if (w_.empty()) return -1;
  return static_cast<int>(w_.size() - 1) * 64 + 63 - std::countl_zero(w_.back());
}

void F2Poly::trim() {
  while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

F2Poly operator+(const F2Poly& a, const F2Poly& b) {
  F2Poly r;
  r.w_.assign(std::max(a.w_.size(), b.w_.size()), 0);
  for (std::size_t i = 0; i < a.w_.size(); ++i) r.w_[i] ^= a.w_[i];
  for (std::size_t i = 0; i < b.w_.size(); ++i) r.w_[i] ^= b.w_[i];
  r.trim();
  return r;
}

F2Poly operator*(const F2Poly& a, const F2Poly& b) {
  F2Poly r;
  int da = a.degree(), db = b.degree();
  if (da < 0 || db < 0) return r;
  r.w_.assign((da + db) / 64 + 1, 0);
  for (int i = 0; i <= da; ++i) {
    if (!a.coeff(i)) continue;
    for (int j = 0; j <= db; ++j)
      if (b.coeff(j)) r.w_[(i + j) / 64] ^= std::uint64_t(1) << ((i + j) % 64);
  }
  r.trim();
  return r;
}

UCoeff UCoeff::zero(Mode m) { return UCoeff(m); }

UCoeff UCoeff::from_int(Mode m, const Int& k) {
  UCoeff c(m);
  if (m == Mode::W)
    c.z_ = k;
  else
    c.p_ = F2Poly::constant(k % 2 != 0);
  return c;
}

UCoeff UCoeff::eps_pow(Mode m, int j) {
  if (j < 0) throw DomainError("negative power of eps");
  UCoeff c(m);
  if (m == Mode::W)
    c.z_ = Int(1) << j;
  else
    c.p_ = F2Poly::monomial(j);
  return c;
}

bool UCoeff::is_zero() const { return m_ == Mode::W ? z_ == 0 : p_.is_zero(); }

std::string UCoeff::to_string() const {
  if (m_ == Mode::W) return z_.str();
  if (p_.is_zero()) return "0";
  std::string s;
  for (int j = p_.degree(); j >= 0; --j) {
    if (!p_.coeff(j)) continue;
    if (!s.empty()) s += " + ";
    s += j == 0 ? "1" : j == 1 ? "eps" : "eps^" + std::to_string(j);
  }
  return s;
}

AValue UCoeff::evaluate(const Field& f) const {
  if (m_ == Mode::W) return AValue::from_int(f, Mode::W, z_);
  AValue r = AValue::zero(f, Mode::H);
  for (int j = 0; j <= p_.degree(); ++j)
    if (p_.coeff(j)) r = r + AValue::eps_pow(f, Mode::H, j);
  return r;
}

UCoeff UCoeff::operator-() const {
  UCoeff r = *this;
  if (m_ == Mode::W) r.z_ = -z_;
  return r;
}

namespace {
void require_same(const UCoeff& a, const UCoeff& b) {
  if (a.mode() != b.mode()) throw RingMismatch("coefficients for different targets");
}
}  // namespace

UCoeff operator+(const UCoeff& a, const UCoeff& b) {
  require_same(a, b);
  UCoeff r(a.m_);
  r.z_ = a.z_ + b.z_;
  r.p_ = a.p_ + b.p_;
  return r;
}

UCoeff operator-(const UCoeff& a, const UCoeff& b) { return a + (-b); }

UCoeff operator*(const UCoeff& a, const UCoeff& b) {
  require_same(a, b);
  UCoeff r(a.m_);
  r.z_ = a.z_ * b.z_;
  r.p_ = a.p_ * b.p_;
  return r;
}

bool operator==(const UCoeff& a, const UCoeff& b) { return a.m_ == b.m_ && a.z_ == b.z_ && a.p_ == b.p_; }

}  // namespace gwinv
