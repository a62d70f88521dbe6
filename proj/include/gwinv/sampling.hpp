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
#include <random>
#include <string>
#include <vector>

#include "gwinv/field.hpp"
#include "gwinv/witt.hpp"

namespace gwinv {

// Seeded generator; draws are reduced by modulus so streams are
// reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n ? g_() % n : 0; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return g_() & 1u; }

 private:
  std::mt19937_64 g_;
};

SquareClass random_sc(const Field& f, Rng& rng);
std::vector<SquareClass> random_slots(const Field& f, int n, Rng& rng);

// sum_{i<=s} phi_i - sum_{i<=t} psi_i with n-fold Pfister forms.
GwElement random_pfister_combo(const Field& f, int n, int s, int t, Rng& rng);
// Sum of `terms` signed, scaled n-fold Pfister forms: an element of I^n.
GwElement random_In(const Field& f, int n, int terms, Rng& rng);
// Diagonal form of the given dimension.
GwElement random_form(const Field& f, int dim, Rng& rng);

// Towers used by sampling checks: every base kind, depths 0 to 2.
std::vector<Field> sample_fields();
// The given field only when text is nonempty, else sample_fields().
std::vector<Field> sample_fields(const std::string& text);

}  // namespace gwinv
