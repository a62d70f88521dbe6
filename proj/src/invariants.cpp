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

#include "gwinv/invariants.hpp"

#include <cctype>

#include "gwinv/divided.hpp"
#include "gwinv/errors.hpp"
#include "gwinv/series.hpp"

namespace gwinv {

SymbolicInvariant::SymbolicInvariant(int n, Mode m, Basis b) : n_(n), m_(m), b_(b) {
  if (n < 0) throw DomainError("invariant degree n must be nonnegative");
}

SymbolicInvariant SymbolicInvariant::basis_element(int n, Mode m, Basis b, int d) {
  if (d < 0) throw DomainError("negative basis index");
  SymbolicInvariant a(n, m, b);
  a.add(d, UCoeff::one(m));
  return a;
}

SymbolicInvariant SymbolicInvariant::constant(int n, Mode m, Basis b, const UCoeff& c) {
  SymbolicInvariant a(n, m, b);
  a.add(0, c);
  return a;
}

UCoeff SymbolicInvariant::coeff(int d) const {
  auto it = c_.find(d);
  return it == c_.end() ? UCoeff::zero(m_) : it->second;
}

void SymbolicInvariant::add(int d, const UCoeff& c) {
  if (c.mode() != m_) throw RingMismatch("coefficient for a different target");
  auto v = coeff(d) + c;
  if (v.is_zero())
    c_.erase(d);
  else
    c_.insert_or_assign(d, v);
}

int SymbolicInvariant::max_degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

bool SymbolicInvariant::is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }

std::string SymbolicInvariant::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  const char* fam = b_ == Basis::F ? "f" : "g";
  for (const auto& [d, c] : c_) {
    if (!s.empty()) s += " + ";
    std::string cs = c.to_string();
    bool compound = cs.find(' ') != std::string::npos;
    if (d == 0) {
      s += compound ? "(" + cs + ")" : cs;
      continue;
    }
    if (cs != "1") s += (compound ? "(" + cs + ")" : cs) + "*";
    s += std::string(fam) + "[" + std::to_string(n_) + "," + std::to_string(d) + "]";
  }
  return s;
}

namespace {

void require_compatible(const SymbolicInvariant& a, const SymbolicInvariant& b) {
  if (a.mode() != b.mode()) throw RingMismatch("invariants for different targets");
  if (a.n() != b.n() && a.n() != 0 && b.n() != 0) throw RingMismatch("invariants of different I^n");
}

}  // namespace

SymbolicInvariant operator+(const SymbolicInvariant& a, const SymbolicInvariant& b) {
  require_compatible(a, b);
  const SymbolicInvariant& lead = a.n_ == 0 ? b : a;
  SymbolicInvariant r(lead.n_, a.m_, lead.b_);
  for (const auto& src : {&a, &b}) {
    auto conv = to_basis(*src, r.b_);
    for (const auto& [d, c] : conv.c_) r.add(d, c);
  }
  return r;
}

SymbolicInvariant operator-(const SymbolicInvariant& a, const SymbolicInvariant& b) {
  return a + UCoeff::from_int(b.mode(), -1) * b;
}

SymbolicInvariant operator*(const UCoeff& k, const SymbolicInvariant& a) {
  SymbolicInvariant r(a.n_, a.m_, a.b_);
  for (const auto& [d, c] : a.c_) r.add(d, k * c);
  return r;
}

bool operator==(const SymbolicInvariant& a, const SymbolicInvariant& b) {
  if (a.m_ != b.m_) return false;
  if (a.n_ != b.n_ && !(a.is_constant() && b.is_constant())) return false;
  auto bb = to_basis(b, a.b_);
  return a.c_ == bb.c_;
}

SymbolicInvariant change_basis(const SymbolicInvariant& a) {
  Mode m = a.mode();
  int n = a.n();
  if (a.basis() == Basis::G) {
    SymbolicInvariant r(n, m, Basis::F);
    for (const auto& [d, c] : a.coeffs())
      for (int k = 0; k <= d; ++k) {
        Int b = g_from_f_binom(d, k);
        if (b != 0) r.add(k, c * UCoeff::from_int(m, b) * UCoeff::eps_pow(m, n * (d - k)));
      }
    return r;
  }
  SymbolicInvariant r(n, m, Basis::G);
  for (const auto& [d, c] : a.coeffs())
    for (int k = 0; k <= d; ++k) {
      Int b = f_from_g_binom(d, k);
      if (b == 0) continue;
      if ((d - k) % 2) b = -b;
      r.add(k, c * UCoeff::from_int(m, b) * UCoeff::eps_pow(m, n * (d - k)));
    }
  return r;
}

SymbolicInvariant to_basis(const SymbolicInvariant& a, Basis b) { return a.basis() == b ? a : change_basis(a); }

SymbolicInvariant phi(const SymbolicInvariant& a, int sign) {
  Mode m = a.mode();
  int n = a.n();
  SymbolicInvariant r(n, m, a.basis());
  UCoeff en = UCoeff::eps_pow(m, n);
  for (const auto& [d, c] : a.coeffs()) {
    if (d == 0) continue;  // constants are killed
    if (a.basis() == Basis::F) {
      if (sign > 0) {
        r.add(d - 1, c);
      } else {
        for (int k = 0; k < d; ++k) {
          int e = d - k - 1;
          r.add(k, c * UCoeff::from_int(m, e % 2 ? -1 : 1) * UCoeff::eps_pow(m, n * e));
        }
      }
      continue;
    }
    // g-family rules, written for g^{e+1} with e = d - 1.
    int e = d - 1;
    r.add(e, c);
    if (e >= 1) {
      if (sign > 0 && e % 2 == 0) r.add(e - 1, c * en);
      if (sign < 0 && e % 2 == 1) r.add(e - 1, -(c * en));
    }
  }
  return r;
}

SymbolicInvariant product(const SymbolicInvariant& a, const SymbolicInvariant& b) {
  require_compatible(a, b);
  Mode m = a.mode();
  int n = a.n() ? a.n() : b.n();
  auto fa = to_basis(a, Basis::F), fb = to_basis(b, Basis::F);
  SymbolicInvariant r(n, m, Basis::F);
  for (const auto& [s, cs] : fa.coeffs())
    for (const auto& [t, ct] : fb.coeffs())
      for (int d = std::max(s, t); d <= s + t; ++d) {
        Int mc = multinomial_C(d, d - s, d - t);
        r.add(d, cs * ct * UCoeff::from_int(m, mc) * UCoeff::eps_pow(m, n * (s + t - d)));
      }
  return to_basis(r, a.n() ? a.basis() : b.basis());
}

SymbolicInvariant psi_tilde(const SymbolicInvariant& a) {
  Mode m = a.mode();
  int n = a.n();
  if (n < 1) throw DomainError("psi_tilde needs n >= 1");
  auto ga = to_basis(a, Basis::G);
  SymbolicInvariant r(n, m, Basis::G);
  for (const auto& [d, c] : ga.coeffs()) {
    if (d == 0) continue;
    if (d % 2)
      r.add(d, c * UCoeff::from_int(m, -delta(m)));
    else
      r.add(d - 1, c * UCoeff::eps_pow(m, n - 1));
  }
  return to_basis(r, a.basis());
}

SymbolicInvariant psi_tilde_f_closed_form(const SymbolicInvariant& a) {
  Mode m = a.mode();
  int n = a.n();
  auto fa = to_basis(a, Basis::F);
  SymbolicInvariant r(n, m, Basis::F);
  for (const auto& [d, c] : fa.coeffs()) {
    for (int k = 1; k <= d - 1; ++k) {
      Int b = ext_binom(d - 1, k - 1);
      if (d % 2) b = -b;
      r.add(k, c * UCoeff::from_int(m, b) * UCoeff::eps_pow(m, n * (d - k) - 1));
    }
    if (d % 2) r.add(d, c * UCoeff::from_int(m, -delta(m)));
  }
  return to_basis(r, a.basis());
}

SymbolicInvariant restrict(const SymbolicInvariant& a) {
  Mode m = a.mode();
  int n = a.n();
  auto fa = to_basis(a, Basis::F);
  SymbolicInvariant r(n + 1, m, Basis::F);
  for (const auto& [d, c] : fa.coeffs()) {
    if (m == Mode::H) {
      if (d % 2 == 0) r.add(d / 2, c * UCoeff::eps_pow(m, (d / 2) * (n - 1)));
      continue;
    }
    for (int k = (d + 1) / 2; k <= d; ++k) {
      Int b = ext_binom(k, d - k);
      if (b != 0) r.add(k, c * UCoeff::from_int(m, b) * UCoeff::eps_pow(m, (d - k) * (n - 1)));
    }
  }
  return to_basis(r, a.basis());
}

SymbolicInvariant omega_t(const SymbolicInvariant& a, int t) {
  Mode m = a.mode();
  int n = a.n();
  if (t < 0 || t >= n) throw DomainError("omega_t needs 0 <= t < n");
  auto fa = to_basis(a, Basis::F);
  SymbolicInvariant r(n - t, m, Basis::F);
  for (const auto& [d, c] : fa.coeffs())
    r.add(d, d == 0 ? c : c * UCoeff::eps_pow(m, t * (d - 1)));
  return to_basis(r, a.basis());
}

AValue evaluate(const SymbolicInvariant& a, const GwElement& q) {
  const auto& f = q.field();
  Mode m = a.mode();
  if (a.n() < 1) throw DomainError("evaluate needs n >= 1");
  if (!is_in_In(q, a.n())) throw MembershipError("evaluate: argument is not in I^" + std::to_string(a.n()));
  AValue acc = AValue::zero(f, m);
  if (a.is_zero()) return acc;
  auto fa = to_basis(a, Basis::F);
  auto vals = eval_f_all(a.n(), fa.max_degree(), q, m);
  for (const auto& [d, c] : fa.coeffs()) acc = acc + c.evaluate(f) * vals[d];
  return acc;
}

SymbolicInvariant shifted(const SymbolicInvariant& a, int plus, int minus) {
  SymbolicInvariant r = a;
  for (int i = 0; i < plus; ++i) r = phi(r, +1);
  for (int i = 0; i < minus; ++i) r = phi(r, -1);
  return r;
}

std::vector<UCoeff> extract_coefficients(const SymbolicInvariant& a, int D) {
  std::vector<UCoeff> out;
  for (int d = 0; d <= D; ++d) {
    int h = d / 2;
    out.push_back(shifted(a, d % 2 ? h + 1 : h, h).coeff(0));
  }
  return out;
}

// ---------------------------------------------------------------- parser

namespace {

class InvParser {
 public:
  InvParser(const std::string& s, Mode m) : s_(s), m_(m) {}

  SymbolicInvariant parse() {
    auto v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    if (v.n() == 0) {
      SymbolicInvariant r(1, m_, v.basis());
      for (const auto& [d, c] : v.coeffs()) r.add(d, c);
      return r;
    }
    return v;
  }

 private:
  SymbolicInvariant expr() {
    skip();
    bool neg = false;
    if (peek() == '-') {
      ++pos_;
      neg = true;
    }
    auto acc = term();
    if (neg) acc = UCoeff::from_int(m_, -1) * acc;
    for (;;) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      auto t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
  }

  SymbolicInvariant term() {
    auto acc = factor();
    for (;;) {
      skip();
      if (peek() != '*') return acc;
      ++pos_;
      acc = mul(acc, factor());
    }
  }

  SymbolicInvariant mul(const SymbolicInvariant& a, const SymbolicInvariant& b) {
    if (a.n() == 0 && a.is_constant()) return a.coeff(0) * b;
    if (b.n() == 0 && b.is_constant()) return b.coeff(0) * a;
    if (a.n() != b.n()) fail("product of invariants of different I^n");
    return product(a, b);
  }

  SymbolicInvariant factor() {
    skip();
    char c = peek();
    if (c == '(') {
      ++pos_;
      auto v = expr();
      skip();
      if (get() != ')') fail("expected ')'");
      return v;
    }
    if ((c == 'f' || c == 'g') && pos_ + 1 < s_.size() && s_[pos_ + 1] == '[') {
      pos_ += 2;
      int n = integer();
      skip();
      if (get() != ',') fail("expected ','");
      int d = integer();
      skip();
      if (get() != ']') fail("expected ']'");
      if (n < 1) fail("n must be positive");
      return SymbolicInvariant::basis_element(n, m_, c == 'f' ? Basis::F : Basis::G, d);
    }
    if (s_.compare(pos_, 3, "eps") == 0) {
      pos_ += 3;
      int j = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        j = integer();
      }
      return SymbolicInvariant::constant(0, m_, Basis::F, UCoeff::eps_pow(m_, j));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int k = integer();
      return SymbolicInvariant::constant(0, m_, Basis::F, UCoeff::from_int(m_, k));
    }
    fail("expected f[n,d], g[n,d], eps, an integer or '('");
  }

  int integer() {
    skip();
    std::size_t b = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (b == pos_ || pos_ - b > 6) fail("expected a small nonnegative integer");
    return std::stoi(s_.substr(b, pos_ - b));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("invariant: " + why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  std::string s_;
  Mode m_;
  std::size_t pos_ = 0;
};

}  // namespace

SymbolicInvariant parse_invariant(const std::string& text, Mode m) { return InvParser(text, m).parse(); }

}  // namespace gwinv
