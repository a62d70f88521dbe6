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

#include "gwinv/witt.hpp"

#include <bit>
#include <cctype>
#include <limits>

#include "gwinv/errors.hpp"

namespace gwinv {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("64-bit overflow in form arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("64-bit overflow in form arithmetic");
  return r;
}

std::int64_t to_int64(const Int& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw DomainError("integer exceeds 64 bits");
  return static_cast<std::int64_t>(x);
}

// ---------------------------------------------------------------- GwElement

GwElement::GwElement(Field f) : f_(std::move(f)), c_(f_->class_count(), 0) {}

GwElement GwElement::one(const Field& f) {
  GwElement x(f);
  x.c_[0] = 1;
  return x;
}

GwElement GwElement::of(const SquareClass& a, std::int64_t mult) {
  GwElement x(a.field());
  x.c_[a.bits()] = mult;
  return x;
}

GwElement GwElement::diag(const Field& f, const std::vector<SquareClass>& entries) {
  GwElement x(f);
  for (const auto& a : entries) {
    require_same_field(f, a.field(), "diag");
    x.add_term(a.bits(), 1);
  }
  return x;
}

GwElement GwElement::hyperbolic(const Field& f) {
  GwElement x = one(f);
  x.add_term(minus_one(f).bits(), 1);
  return x;
}

void GwElement::add_term(std::uint32_t bits, std::int64_t mult) { c_.at(bits) = checked_add(c_[bits], mult); }

std::int64_t GwElement::dim() const {
  std::int64_t d = 0;
  for (auto m : c_) d = checked_add(d, m);
  return d;
}

bool GwElement::structurally_zero() const {
  for (auto m : c_)
    if (m) return false;
  return true;
}

bool GwElement::is_form() const {
  for (auto m : c_)
    if (m < 0) return false;
  return true;
}

std::string GwElement::to_string() const {
  std::string s;
  for (std::uint32_t b = 0; b < c_.size(); ++b) {
    std::int64_t m = c_[b];
    if (!m) continue;
    if (s.empty())
      s += m < 0 ? "-" : "";
    else
      s += m < 0 ? " - " : " + ";
    std::int64_t a = m < 0 ? -m : m;
    if (a != 1) s += std::to_string(a) + "*";
    s += "diag(" + SquareClass(f_, b).to_string() + ")";
  }
  return s.empty() ? "0" : s;
}

GwElement GwElement::operator-() const {
  GwElement r(f_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_mul(c_[i], -1);
  return r;
}

GwElement& GwElement::operator+=(const GwElement& o) {
  require_same_field(f_, o.f_, "GW addition");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

GwElement& GwElement::operator-=(const GwElement& o) {
  require_same_field(f_, o.f_, "GW subtraction");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], checked_mul(o.c_[i], -1));
  return *this;
}

GwElement operator*(const GwElement& a, const GwElement& b) {
  require_same_field(a.f_, b.f_, "GW multiplication");
  GwElement r(a.f_);
  for (std::uint32_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (std::uint32_t j = 0; j < b.c_.size(); ++j) {
      if (!b.c_[j]) continue;
      r.c_[i ^ j] = checked_add(r.c_[i ^ j], checked_mul(a.c_[i], b.c_[j]));
    }
  }
  return r;
}

GwElement operator*(std::int64_t k, const GwElement& a) {
  GwElement r(a.f_);
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = checked_mul(k, a.c_[i]);
  return r;
}

GwElement GwElement::scaled(const SquareClass& a) const {
  require_same_field(f_, a.field(), "GW scaling");
  GwElement r(f_);
  for (std::uint32_t i = 0; i < c_.size(); ++i) r.c_[i ^ a.bits()] = c_[i];
  return r;
}

// ---------------------------------------------------------------- base Witt rings

namespace basew {

namespace {
enum class K { C, R, F3, F1 };
K kind(const FieldDescriptor& f) {
  switch (f.base) {
    case BaseKind::QuadClosed: return K::C;
    case BaseKind::RealClosed: return K::R;
    case BaseKind::FiniteOdd: return f.q % 4 == 3 ? K::F3 : K::F1;
  }
  return K::C;
}
std::int64_t mod4(std::int64_t a) { return ((a % 4) + 4) % 4; }
}  // namespace

std::int64_t add(const FieldDescriptor& f, std::int64_t a, std::int64_t b) {
  switch (kind(f)) {
    case K::C: return (a ^ b) & 1;
    case K::R: return checked_add(a, b);
    case K::F3: return (a + b) % 4;
    case K::F1: return a ^ b;
  }
  return 0;
}

std::int64_t neg(const FieldDescriptor& f, std::int64_t a) {
  switch (kind(f)) {
    case K::R: return checked_mul(a, -1);
    case K::F3: return mod4(-a);
    default: return a;
  }
}

std::int64_t mul(const FieldDescriptor& f, std::int64_t a, std::int64_t b) {
  switch (kind(f)) {
    case K::C: return a & b;
    case K::R: return checked_mul(a, b);
    case K::F3: return (a * b) % 4;
    case K::F1: {
      std::int64_t a0 = a & 1, a1 = a >> 1 & 1, b0 = b & 1, b1 = b >> 1 & 1;
      return ((a0 & b0) ^ (a1 & b1)) | (((a0 & b1) ^ (a1 & b0)) << 1);
    }
  }
  return 0;
}

std::int64_t from_int(const FieldDescriptor& f, std::int64_t k) { return entry(f, false, k); }

std::int64_t entry(const FieldDescriptor& f, bool base_bit, std::int64_t m) {
  switch (kind(f)) {
    case K::C: return m & 1;
    case K::R: return base_bit ? checked_mul(m, -1) : m;
    case K::F3: return mod4(base_bit ? -m : m);
    case K::F1: return base_bit ? (m & 1) << 1 : m & 1;
  }
  return 0;
}

bool in_power(const FieldDescriptor& f, std::int64_t a, int j) {
  if (j <= 0) return true;
  switch (kind(f)) {
    case K::C: return a == 0;
    case K::R:
      if (j >= 63) return a == 0;
      return a % (std::int64_t(1) << j) == 0;
    case K::F3: return j == 1 ? a % 2 == 0 : a == 0;
    case K::F1: return j == 1 ? (a & 1) == (a >> 1 & 1) : a == 0;
  }
  return false;
}

bool e_bit(const FieldDescriptor& f, std::int64_t a, int j) {
  if (!in_power(f, a, j)) throw MembershipError("base Witt class outside the requested power of I");
  switch (kind(f)) {
    case K::C: return j == 0 ? (a & 1) : false;
    case K::R:
      if (j >= 63) return false;
      return (a / (std::int64_t(1) << j)) & 1;
    case K::F3: return j == 0 ? (a & 1) : j == 1 ? a != 0 : false;
    case K::F1: return j == 0 ? ((a ^ (a >> 1)) & 1) : j == 1 ? a != 0 : false;
  }
  return false;
}

}  // namespace basew

// ---------------------------------------------------------------- WittClass

WittClass::WittClass(Field f) : f_(std::move(f)), w_(std::size_t(1) << f_->depth(), 0) {}

WittClass WittClass::one(const Field& f) { return from_int(f, std::int64_t(1)); }

WittClass WittClass::from_int(const Field& f, std::int64_t k) {
  WittClass q(f);
  q.w_[0] = basew::from_int(*f, k);
  return q;
}

WittClass WittClass::from_int(const Field& f, const Int& k) {
  if (f->base == BaseKind::RealClosed) return from_int(f, to_int64(k));
  Int r = k % 4;
  if (r < 0) r += 4;
  return from_int(f, static_cast<std::int64_t>(r));
}

bool WittClass::is_zero() const {
  for (auto v : w_)
    if (v) return false;
  return true;
}

std::string WittClass::to_string() const {
  if (is_zero()) return "0";
  if (*this == one(f_)) return "1";
  return to_gw(*this).to_string();
}

WittClass WittClass::operator-() const {
  WittClass r(f_);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = basew::neg(*f_, w_[i]);
  return r;
}

WittClass operator+(const WittClass& a, const WittClass& b) {
  require_same_field(a.f_, b.f_, "Witt addition");
  WittClass r(a.f_);
  for (std::size_t i = 0; i < a.w_.size(); ++i) r.w_[i] = basew::add(*a.f_, a.w_[i], b.w_[i]);
  return r;
}

WittClass operator-(const WittClass& a, const WittClass& b) { return a + (-b); }

WittClass operator*(const WittClass& a, const WittClass& b) {
  require_same_field(a.f_, b.f_, "Witt multiplication");
  const auto& F = *a.f_;
  WittClass r(a.f_);
  for (std::uint32_t i = 0; i < a.w_.size(); ++i) {
    if (!a.w_[i]) continue;
    for (std::uint32_t j = 0; j < b.w_.size(); ++j) {
      if (!b.w_[j]) continue;
      r.w_[i ^ j] = basew::add(F, r.w_[i ^ j], basew::mul(F, a.w_[i], b.w_[j]));
    }
  }
  return r;
}

bool operator==(const WittClass& a, const WittClass& b) { return same_field(a.f_, b.f_) && a.w_ == b.w_; }

WittClass witt_canonical(const GwElement& x) {
  const auto& F = *x.field();
  WittClass q(x.field());
  const auto& c = x.raw();
  for (std::uint32_t b = 0; b < c.size(); ++b) {
    if (!c[b]) continue;
    std::uint32_t mask = b >> 1;
    q.set_component(mask, basew::add(F, q.component(mask), basew::entry(F, b & 1u, c[b])));
  }
  return q;
}

bool gw_equal(const GwElement& x, const GwElement& y) {
  require_same_field(x.field(), y.field(), "gw_equal");
  return x.dim() == y.dim() && witt_canonical(x) == witt_canonical(y);
}

GwElement to_gw(const WittClass& q) {
  const auto& f = q.field();
  GwElement x(f);
  for (std::uint32_t mask = 0; mask < q.components().size(); ++mask) {
    std::int64_t v = q.component(mask);
    if (!v) continue;
    std::uint32_t b = mask << 1;
    switch (f->base) {
      case BaseKind::QuadClosed: x.add_term(b, 1); break;
      case BaseKind::RealClosed: x.add_term(v > 0 ? b : b | 1u, v > 0 ? v : -v); break;
      case BaseKind::FiniteOdd:
        if (f->q % 4 == 3) {
          x.add_term(b, v);
        } else {
          if (v & 1) x.add_term(b, 1);
          if (v & 2) x.add_term(b | 1u, 1);
        }
        break;
    }
  }
  return x;
}

GwElement pfister(const std::vector<SquareClass>& args) {
  if (args.empty()) throw DomainError("pfister: empty argument list");
  const auto& f = args[0].field();
  auto m1 = minus_one(f);
  GwElement r = GwElement::one(f);
  for (const auto& a : args) {
    GwElement b = GwElement::one(f);
    b.add_term((m1 * a).bits(), 1);
    r = r * b;
  }
  return r;
}

GwElement gpfister(const std::vector<SquareClass>& args) {
  if (args.empty()) throw DomainError("gpfister: empty argument list");
  const auto& f = args[0].field();
  GwElement r = GwElement::one(f);
  for (const auto& a : args) {
    GwElement b = GwElement::one(f);
    b.add_term(a.bits(), -1);
    r = r * b;
  }
  return r;
}

GwElement mul_forms(const GwElement& x, const GwElement& y) { return x * y; }

TruncSeries<GwElement> lambda_series(const GwElement& x, int D) {
  const auto& f = x.field();
  std::vector<GwElement> res(D + 1, GwElement(f));
  res[0] = GwElement::one(f);
  const auto& c = x.raw();
  for (std::uint32_t b = 0; b < c.size(); ++b) {
    std::int64_t m = c[b];
    if (!m) continue;
    // lambda_t(m<a>) = (1 + <a>t)^m = sum binom(m,k) <a>^k t^k.
    SquareClass a(f, b);
    std::vector<GwElement> next(D + 1, GwElement(f));
    for (int k = 0; k <= D; ++k) {
      std::int64_t bk = ext_binom64(m, k);
      if (!bk) continue;
      for (int d = k; d <= D; ++d) {
        if (res[d - k].structurally_zero()) continue;
        const GwElement& src = res[d - k];
        next[d] += bk * ((k % 2) ? src.scaled(a) : src);
      }
    }
    res = std::move(next);
  }
  return TruncSeries<GwElement>(std::move(res));
}

GwElement lambda_power(int d, const GwElement& x) {
  if (d < 0) throw DomainError("lambda_power: negative degree");
  return lambda_series(x, d)[d];
}

std::vector<std::int64_t> pfister_coordinates(const WittClass& q) {
  const auto& F = *q.field();
  std::vector<std::int64_t> v = q.components();
  int m = F.depth();
  for (int i = 0; i < m; ++i)
    for (std::uint32_t mask = 0; mask < v.size(); ++mask)
      if (!(mask >> i & 1u)) v[mask] = basew::add(F, v[mask], v[mask | (1u << i)]);
  for (std::uint32_t mask = 0; mask < v.size(); ++mask)
    if (std::popcount(mask) % 2) v[mask] = basew::neg(F, v[mask]);
  return v;
}

bool is_in_In(const WittClass& q, int n) {
  if (n <= 0) return true;
  auto v = pfister_coordinates(q);
  for (std::uint32_t T = 0; T < v.size(); ++T)
    if (!basew::in_power(*q.field(), v[T], n - std::popcount(T))) return false;
  return true;
}

bool is_in_In(const GwElement& x, int n) { return is_in_In(witt_canonical(x), n); }

GwElement hat_lift(const GwElement& x) {
  std::int64_t d = x.dim();
  if (d % 2) throw DomainError("hat_lift: odd-dimensional class is not in I");
  return x - (d / 2) * GwElement::hyperbolic(x.field());
}

GwElement hat_lift(const WittClass& q) {
  if (!is_in_In(q, 1)) throw DomainError("hat_lift: class is not in I");
  return hat_lift(to_gw(q));
}

WittClass second_residue(const WittClass& q) {
  const auto& f = q.field();
  auto rf = residue_field(f);
  WittClass r(rf);
  std::uint32_t top = 1u << (f->depth() - 1);
  for (std::uint32_t mask = 0; mask < q.components().size(); ++mask)
    if (mask & top) r.set_component(mask ^ top, q.component(mask));
  return r;
}

// ---------------------------------------------------------------- form parser

namespace {

class FormParser {
 public:
  FormParser(const Field& f, const std::string& s) : f_(f), s_(s) {}

  GwElement parse() {
    skip();
    GwElement acc(f_);
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = get() == '-' ? -1 : 1;
      skip();
    }
    acc += sign * term();
    for (;;) {
      skip();
      if (pos_ >= s_.size()) break;
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      skip();
      acc += (op == '-' ? -1 : 1) * term();
    }
    return acc;
  }

 private:
  GwElement term() {
    std::int64_t mult = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t b = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ - b > 9) fail("multiplier too large");
      mult = std::stoll(s_.substr(b, pos_ - b));
      skip();
      // A bare integer k stands for k<1>.
      if (pos_ >= s_.size() || peek() == '+' || peek() == '-') return mult * GwElement::one(f_);
      if (get() != '*') fail("expected '*' after multiplier");
      skip();
    }
    return mult * atom();
  }

  GwElement atom() {
    if (s_.compare(pos_, 5, "diag(") == 0) {
      pos_ += 5;
      return GwElement::diag(f_, args());
    }
    if (s_.compare(pos_, 3, "pf(") == 0) {
      pos_ += 3;
      return pfister(args());
    }
    if (peek() == 'H') {
      ++pos_;
      return GwElement::hyperbolic(f_);
    }
    fail("expected diag(...), pf(...) or H");
    return GwElement(f_);
  }

  std::vector<SquareClass> args() {
    std::vector<SquareClass> out;
    for (;;) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')') ++pos_;
      if (pos_ >= s_.size()) fail("unterminated argument list");
      out.push_back(parse_sc(f_, s_.substr(b, pos_ - b)));
      if (get() == ')') break;
    }
    return out;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("form: " + why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  Field f_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

GwElement parse_form(const Field& f, const std::string& text) { return FormParser(f, text).parse(); }

}  // namespace gwinv
