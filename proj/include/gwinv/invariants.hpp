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

#include <map>
#include <string>
#include <vector>

#include "gwinv/target.hpp"
#include "gwinv/ucoeff.hpp"
#include "gwinv/witt.hpp"

namespace gwinv {

enum class Basis { F, G };

// Finitely supported invariant sum_d a_d b_n^d of I^n with values in A,
// where b is the f- or g-family and a_d lies in the eps-subring.
class SymbolicInvariant {
 public:
  SymbolicInvariant(int n, Mode m, Basis b);
  static SymbolicInvariant basis_element(int n, Mode m, Basis b, int d);
  static SymbolicInvariant constant(int n, Mode m, Basis b, const UCoeff& c);

  int n() const { return n_; }
  Mode mode() const { return m_; }
  Basis basis() const { return b_; }
  const std::map<int, UCoeff>& coeffs() const { return c_; }
  UCoeff coeff(int d) const;
  void add(int d, const UCoeff& c);
  int max_degree() const;  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const;
  bool is_normalized() const { return coeff(0).is_zero(); }
  std::string to_string() const;

  friend SymbolicInvariant operator+(const SymbolicInvariant& a, const SymbolicInvariant& b);
  friend SymbolicInvariant operator-(const SymbolicInvariant& a, const SymbolicInvariant& b);
  friend SymbolicInvariant operator*(const UCoeff& k, const SymbolicInvariant& a);
  // Equal as invariants: compared in a common basis.
  friend bool operator==(const SymbolicInvariant& a, const SymbolicInvariant& b);

 private:
  int n_;
  Mode m_;
  Basis b_;
  std::map<int, UCoeff> c_;  // no zero entries
};

SymbolicInvariant change_basis(const SymbolicInvariant& a);
SymbolicInvariant to_basis(const SymbolicInvariant& a, Basis b);

// Shift operator Phi^{+} (sign > 0) or Phi^{-} (sign < 0), computed in the
// basis of the argument.
SymbolicInvariant phi(const SymbolicInvariant& a, int sign);

SymbolicInvariant product(const SymbolicInvariant& a, const SymbolicInvariant& b);

// Similitude operator: a(<l>q) = a(q) + {l} psi_tilde(a)(q).
SymbolicInvariant psi_tilde(const SymbolicInvariant& a);
// Closed form of the similitude operator on the f-family, kept as an
// independent cross-check of psi_tilde.
SymbolicInvariant psi_tilde_f_closed_form(const SymbolicInvariant& a);

// Restriction from I^n to I^{n+1}.
SymbolicInvariant restrict(const SymbolicInvariant& a);

// f_n^d -> {-1}^{t(d-1)} f_{n-t}^d on normalized parts; constants are kept.
SymbolicInvariant omega_t(const SymbolicInvariant& a, int t);

// a(q) for a GW representative q of a class in I^n.
AValue evaluate(const SymbolicInvariant& a, const GwElement& q);

// (a^{[d]}(0))_{d <= D}: iterated shifts, then the constant coefficient.
std::vector<UCoeff> extract_coefficients(const SymbolicInvariant& a, int D);
SymbolicInvariant shifted(const SymbolicInvariant& a, int plus, int minus);

// Literal grammar: sums and products of f[n,d], g[n,d], eps, eps^k and
// integers. The result uses the basis of the first family symbol.
SymbolicInvariant parse_invariant(const std::string& text, Mode m);

}  // namespace gwinv
