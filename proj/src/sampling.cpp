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

#include "gwinv/sampling.hpp"

namespace gwinv {

SquareClass random_sc(const Field& f, Rng& rng) {
  std::uint32_t b = static_cast<std::uint32_t>(rng.below(f->class_count()));
  if (f->base == BaseKind::QuadClosed) b &= ~1u;
  return SquareClass(f, b);
}

std::vector<SquareClass> random_slots(const Field& f, int n, Rng& rng) {
  std::vector<SquareClass> s;
  for (int i = 0; i < n; ++i) s.push_back(random_sc(f, rng));
  return s;
}

GwElement random_pfister_combo(const Field& f, int n, int s, int t, Rng& rng) {
  GwElement x(f);
  for (int i = 0; i < s; ++i) x += pfister(random_slots(f, n, rng));
  for (int i = 0; i < t; ++i) x -= pfister(random_slots(f, n, rng));
  return x;
}

GwElement random_In(const Field& f, int n, int terms, Rng& rng) {
  GwElement x(f);
  for (int i = 0; i < terms; ++i) {
    GwElement p = n > 0 ? pfister(random_slots(f, n, rng)) : GwElement::one(f);
    p = p.scaled(random_sc(f, rng));
    if (rng.coin())
      x -= p;
    else
      x += p;
  }
  return x;
}

GwElement random_form(const Field& f, int dim, Rng& rng) {
  GwElement x(f);
  for (int i = 0; i < dim; ++i) x.add_term(random_sc(f, rng).bits(), 1);
  return x;
}

std::vector<Field> sample_fields() {
  return {
      parse_field("C((t1))((t2))"),
      parse_field("R"),
      parse_field("R((t1))"),
      parse_field("R((t1))((t2))"),
      parse_field("F3((t1))"),
      parse_field("F5((t1))((t2))"),
      parse_field("F7((t1))((t2))"),
  };
}

std::vector<Field> sample_fields(const std::string& text) {
  if (text.empty()) return sample_fields();
  return {parse_field(text)};
}

}  // namespace gwinv
