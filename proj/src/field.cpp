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

#include "gwinv/field.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "gwinv/errors.hpp"

namespace gwinv {

namespace {

bool is_odd_prime_power(int q) {
  if (q < 3 || q % 2 == 0) return false;
  int p = 3;
  while (p * p <= q && q % p != 0) p += 2;
  if (q % p != 0) p = q;
  while (q % p == 0) q /= p;
  return q == 1;
}

bool valid_var_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  if (s == "u") return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string FieldDescriptor::to_string() const {
  std::string s = base == BaseKind::QuadClosed ? "C" : base == BaseKind::RealClosed ? "R" : "F" + std::to_string(q);
  for (const auto& v : vars) s += "((" + v + "))";
  return s;
}

bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
  return a.base == b.base && a.q == b.q && a.vars == b.vars;
}

Field make_field(BaseKind base, int q, std::vector<std::string> vars) {
  if (base == BaseKind::FiniteOdd && !is_odd_prime_power(q))
    throw DomainError("finite base field needs an odd prime power, got " + std::to_string(q));
  if (base != BaseKind::FiniteOdd) q = 0;
  if (static_cast<int>(vars.size()) > kMaxDepth) throw DomainError("tower depth exceeds limit");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!valid_var_name(v)) throw DomainError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
  }
  auto f = std::make_shared<FieldDescriptor>();
  f->base = base;
  f->q = q;
  f->vars = std::move(vars);
  return f;
}

Field parse_field(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty field descriptor");
  std::size_t pos = 0;
  BaseKind base;
  int q = 0;
  if (s[0] == 'C') {
    base = BaseKind::QuadClosed;
    pos = 1;
  } else if (s[0] == 'R') {
    base = BaseKind::RealClosed;
    pos = 1;
  } else if (s[0] == 'F') {
    base = BaseKind::FiniteOdd;
    pos = 1;
    std::size_t b = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == b || pos - b > 6) throw ParseError("bad finite field size in '" + s + "'");
    q = std::stoi(s.substr(b, pos - b));
  } else {
    throw ParseError("unknown base field in '" + s + "'");
  }
  std::vector<std::string> vars;
  while (pos < s.size()) {
    if (s.compare(pos, 2, "((") != 0) throw ParseError("expected '((' in '" + s + "'");
    auto close = s.find("))", pos + 2);
    if (close == std::string::npos) throw ParseError("unterminated '((' in '" + s + "'");
    vars.push_back(s.substr(pos + 2, close - pos - 2));
    pos = close + 2;
  }
  try {
    return make_field(base, q, std::move(vars));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Field residue_field(const Field& f) {
  if (f->depth() == 0) throw DomainError("residue field of a tower of depth 0");
  std::vector<std::string> v(f->vars.begin(), f->vars.end() - 1);
  return make_field(f->base, f->q, std::move(v));
}

bool same_field(const Field& a, const Field& b) { return a == b || *a == *b; }

void require_same_field(const Field& a, const Field& b, const char* what) {
  if (!same_field(a, b)) throw RingMismatch(std::string(what) + ": operands over different fields");
}

SquareClass::SquareClass(Field f, std::uint32_t bits) : f_(std::move(f)), bits_(bits) {
  if (bits_ >= f_->class_count()) throw DomainError("square class bits out of range");
  if (f_->base == BaseKind::QuadClosed && (bits_ & 1u)) throw DomainError("no base non-square over a quadratically closed base");
}

std::string SquareClass::to_string() const {
  std::vector<std::string> parts;
  std::string sign;
  if (base_bit()) {
    if (f_->base == BaseKind::RealClosed)
      sign = "-";
    else
      parts.push_back("u");
  }
  for (int i = 0; i < f_->depth(); ++i)
    if (var_mask() >> i & 1u) parts.push_back(f_->vars[i]);
  if (parts.empty()) return sign + "1";
  std::string s = sign;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "*" : "") + parts[i];
  return s;
}

SquareClass sc_mul(const SquareClass& a, const SquareClass& b) {
  require_same_field(a.field(), b.field(), "sc_mul");
  return SquareClass(a.field(), a.bits() ^ b.bits());
}

SquareClass minus_one(const Field& f) {
  switch (f->base) {
    case BaseKind::QuadClosed: return SquareClass(f, 0);
    case BaseKind::RealClosed: return SquareClass(f, 1);
    case BaseKind::FiniteOdd: return SquareClass(f, f->q % 4 == 3 ? 1u : 0u);
  }
  return SquareClass(f, 0);
}

SquareClass var_class(const Field& f, int i) {
  if (i < 0 || i >= f->depth()) throw DomainError("variable index out of range");
  return SquareClass(f, 1u << (i + 1));
}

SquareClass parse_sc(const Field& f, const std::string& text) {
  std::string s = trim(text);
  std::uint32_t bits = 0;
  if (!s.empty() && s[0] == '-') {
    bits ^= minus_one(f).bits();
    s = trim(s.substr(1));
  }
  if (s.empty()) throw ParseError("empty square class");
  if (s == "1") return SquareClass(f, bits);
  std::stringstream ss(s);
  std::string gen;
  while (std::getline(ss, gen, '*')) {
    gen = trim(gen);
    if (gen == "u") {
      if (f->base != BaseKind::FiniteOdd) throw ParseError("'u' is only available over a finite base");
      bits ^= 1u;
      continue;
    }
    auto it = std::find(f->vars.begin(), f->vars.end(), gen);
    if (it == f->vars.end()) throw ParseError("unknown generator '" + gen + "' over " + f->to_string());
    bits ^= 1u << (1 + (it - f->vars.begin()));
  }
  return SquareClass(f, bits);
}

std::vector<SquareClass> enumerate_sc(const Field& f) {
  if (f->depth() > 6) throw DomainError("enumerate_sc: tower depth above 6");
  std::vector<SquareClass> out;
  std::uint32_t step = f->base == BaseKind::QuadClosed ? 2 : 1;
  for (std::uint32_t b = 0; b < f->class_count(); b += step) out.emplace_back(f, b);
  return out;
}

bool represented_by_binary(const SquareClass& c, const SquareClass& a, const SquareClass& b) {
  require_same_field(c.field(), a.field(), "represented_by_binary");
  require_same_field(c.field(), b.field(), "represented_by_binary");
  if (c.is_one()) return true;
  if (c == minus_one(c.field()) * a * b) return true;
  // Nondegenerate binary forms over a finite field are universal.
  return c.field()->base == BaseKind::FiniteOdd && c.var_mask() == 0 && a.var_mask() == 0 && b.var_mask() == 0;
}

}  // namespace gwinv
