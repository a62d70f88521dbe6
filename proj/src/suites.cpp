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

#include "gwinv/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <utility>

#include "gwinv/cohomology.hpp"
#include "gwinv/divided.hpp"
#include "gwinv/errors.hpp"
#include "gwinv/factorized.hpp"
#include "gwinv/invariants.hpp"
#include "gwinv/sampling.hpp"
#include "gwinv/series.hpp"
#include "gwinv/witt.hpp"

namespace gwinv {
namespace {

// nullopt on success, else (expected, got).
using Outcome = std::optional<std::pair<std::string, std::string>>;

template <class... A>
std::string cat(const A&... a) {
  std::ostringstream o;
  (o << ... << a);
  return o.str();
}

std::string slots_str(const std::vector<SquareClass>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + "]";
}

template <class R>
std::string series_str(const TruncSeries<R>& f) {
  std::string s;
  for (int d = 0; d <= f.precision(); ++d) s += (d ? "," : "") + f[d].str();
  return s;
}

Outcome ok() { return std::nullopt; }

Outcome holds(bool cond, const std::string& expected = "true", const std::string& got = "false") {
  if (cond) return std::nullopt;
  return std::make_pair(expected, got);
}

Outcome same(const AValue& e, const AValue& g) {
  if (e == g) return std::nullopt;
  return std::make_pair(e.to_string(), g.to_string());
}

Outcome same(const GwElement& e, const GwElement& g) {
  if (gw_equal(e, g)) return std::nullopt;
  return std::make_pair(e.to_string(), g.to_string());
}

Outcome same(const SymbolicInvariant& e, const SymbolicInvariant& g) {
  if (e == g) return std::nullopt;
  return std::make_pair(e.to_string(), g.to_string());
}

Outcome same(const CohClass& e, const CohClass& g) {
  if (e == g) return std::nullopt;
  return std::make_pair(e.to_string(), g.to_string());
}

Outcome vanishes(const AValue& g) {
  if (g.is_zero()) return std::nullopt;
  return std::make_pair(std::string("0"), g.to_string());
}

class Recorder {
 public:
  explicit Recorder(Report& r) : r_(r) {}

  // Every case label ends with "check=<group>".
  void run(const std::function<std::string()>& inputs, const std::function<Outcome()>& body) {
    std::string label = inputs();
    auto at = label.rfind("check=");
    auto& tally = r_.checks[at == std::string::npos ? std::string() : label.substr(at + 6)];
    ++r_.cases_total;
    ++tally.first;
    Outcome out;
    try {
      out = body();
    } catch (const std::exception& e) {
      out = std::make_pair(std::string("no error"), std::string("error: ") + e.what());
    }
    if (!out) return;
    ++r_.cases_failed;
    ++tally.second;
    if (!r_.first_failure) r_.first_failure = Failure{std::move(label), out->first, out->second};
  }

 private:
  Report& r_;
};

std::vector<Mode> modes(const SuiteConfig& c) {
  if (c.mode) return {*c.mode};
  return {Mode::W, Mode::H};
}

Field pick(const std::vector<Field>& fs, Rng& rng) { return fs[rng.below(fs.size())]; }

AValue sign_pow(const Field& f, Mode m, int k) { return AValue::from_int(f, m, k % 2 ? -1 : 1); }

// Coefficient drawn from a small box of the eps-subring.
UCoeff random_ucoeff(Mode m, Rng& rng) {
  if (m == Mode::W) return UCoeff::from_int(m, rng.range(-4, 4));
  UCoeff c = UCoeff::zero(m);
  for (int j = 0; j <= 2; ++j)
    if (rng.coin()) c = c + UCoeff::eps_pow(m, j);
  return c;
}

SymbolicInvariant random_invariant(int n, Mode m, Basis b, int max_deg, bool normalized, Rng& rng) {
  SymbolicInvariant a(n, m, b);
  for (int d = normalized ? 1 : 0; d <= max_deg; ++d)
    if (rng.coin()) a.add(d, random_ucoeff(m, rng));
  return a;
}

// Embeds an element over the residue field into the full tower; the top
// variable is the highest square-class bit, so bit patterns carry over.
GwElement embed(const Field& f, const GwElement& x) {
  GwElement y(f);
  for (std::uint32_t b = 0; b < x.raw().size(); ++b)
    if (x.raw()[b]) y.add_term(b, x.raw()[b]);
  return y;
}

// All multisets of size n drawn from v, in lexicographic order.
void multisets(const std::vector<SquareClass>& v, int n, std::size_t from, std::vector<SquareClass>& cur,
               const std::function<void(const std::vector<SquareClass>&)>& fn) {
  if (static_cast<int>(cur.size()) == n) {
    fn(cur);
    return;
  }
  for (std::size_t i = from; i < v.size(); ++i) {
    cur.push_back(v[i]);
    multisets(v, n, i, cur, fn);
    cur.pop_back();
  }
}

// ---------------------------------------------------------------- series

// x_1 = t/(1-t), x_{k+1} = x_k + 2^{k-1} x_k^2, over an arbitrary ring.
template <class R>
TruncSeries<R> x_generic(int n, int D) {
  std::vector<R> c(D + 1, R(0));
  for (int d = 1; d <= D; ++d) c[d] = 1;
  TruncSeries<R> x(c);
  R two_pow = 1;
  for (int k = 1; k < n; ++k) {
    x = x + TruncSeries<R>::constant(two_pow, D) * x * x;
    two_pow *= 2;
  }
  return x;
}

void suite_series(const SuiteConfig& c, Recorder& rec) {
  const int D = c.prec;
  const int N = std::max(c.n_max, 6);
  const auto t = identity_series(D);
  for (int n = 1; n <= N; ++n) {
    auto in = [=](const char* what) { return [=] { return cat("n=", n, " D=", D, " check=", what); }; };
    rec.run(in("h_two_sided_inverse"), [&]() -> Outcome {
      auto x = build_x(n, D);
      auto h = build_h(n, D);
      if (!(compose(x, h) == t)) return std::make_pair(series_str(t), series_str(compose(x, h)));
      return holds(compose(h, x) == t, series_str(t), series_str(compose(h, x)));
    });
    rec.run(in("h_integral_over_Q"), [&]() -> Outcome {
      auto hq = comp_inverse(x_generic<Rat>(n, D));
      auto h = build_h(n, D);
      for (int d = 0; d <= D; ++d) {
        if (denominator(hq[d]) != 1) return std::make_pair(cat("integer at t^", d), hq[d].str());
        if (numerator(hq[d]) != h[d]) return std::make_pair(h[d].str(), hq[d].str());
      }
      return ok();
    });
    rec.run(in("catalan_inverse"), [&]() -> Outcome {
      auto p = build_p(n, D);
      auto pinv = p_inverse_catalan(n, D);
      if (!(compose(p, pinv) == t)) return std::make_pair(series_str(t), series_str(compose(p, pinv)));
      return holds(compose(pinv, p) == t, series_str(t), series_str(compose(pinv, p)));
    });
    if (n < N) {
      rec.run(in("even_odd_recursion"), [&]() -> Outcome {
        auto [a, b] = even_odd_split(build_x(n, D));
        auto [a1, b1] = even_odd_split(build_x(n + 1, D));
        auto k = ZSeries::constant(Int(1) << n, D);
        auto two = ZSeries::constant(2, D);
        if (!(a1 == k * b * b)) return std::make_pair(series_str(k * b * b), series_str(a1));
        if (!(a1 == two * a + k * a * a)) return std::make_pair(series_str(two * a + k * a * a), series_str(a1));
        return holds(b1 == b + k * a * b, series_str(b + k * a * b), series_str(b1));
      });
      rec.run(in("h_recursion"), [&]() -> Outcome {
        auto lhs = build_h(n + 1, D);
        auto rhs = compose(build_h(n, D), p_inverse_catalan(n, D));
        return holds(lhs == rhs, series_str(rhs), series_str(lhs));
      });
    }
  }
}

// ---------------------------------------------------------------- lambda

void suite_lambda(const SuiteConfig& c, Recorder& rec) {
  Rng rng(c.seed);
  auto fields = sample_fields(c.field);
  const int D = c.d_max;
  for (int s = 0; s < c.samples; ++s) {
    Field f = pick(fields, rng);
    GwElement x = random_form(f, rng.range(0, 3), rng) - random_form(f, rng.range(0, 2), rng);
    GwElement y = random_form(f, rng.range(0, 3), rng) - random_form(f, rng.range(0, 2), rng);
    auto in = [=](const char* what) {
      return [=] { return cat("field=", f->to_string(), " x=", x.to_string(), " y=", y.to_string(), " check=", what); };
    };
    rec.run(in("lambda0_lambda1"), [&]() -> Outcome {
      if (auto o = same(GwElement::one(f), lambda_power(0, x))) return o;
      return same(x, lambda_power(1, x));
    });
    rec.run(in("sum_rule"), [&]() -> Outcome {
      auto lx = lambda_series(x, D), ly = lambda_series(y, D), lxy = lambda_series(x + y, D);
      for (int d = 0; d <= D; ++d) {
        GwElement rhs(f);
        for (int k = 0; k <= d; ++k) rhs += lx[k] * ly[d - k];
        if (auto o = same(rhs, lxy[d])) return o;
      }
      return ok();
    });
    SquareClass a = random_sc(f, rng), b = random_sc(f, rng);
    rec.run(in("pfister_relations"), [&]() -> Outcome {
      GwElement two_a = 2 * pfister({a});
      if (auto o = same(pfister({minus_one(f), a}), pfister({a, a}))) return o;
      if (auto o = same(two_a, pfister({a, a}))) return o;
      GwElement g = gpfister({a});
      auto lg = lambda_series(g, 5);
      for (int d = 1; d <= 5; ++d)
        if (auto o = same(g, lg[d])) return std::make_pair(cat(o->first, " at d=", d), o->second);
      return same(mul_forms(pfister({minus_one(f)}), x), 2 * x);
    });
    rec.run(in("hat_lift"), [&]() -> Outcome {
      GwElement q = x - y;
      GwElement qq = q.dim() % 2 ? q + GwElement::one(f) : q;
      GwElement hl = hat_lift(qq);
      if (hl.dim() != 0) return std::make_pair(std::string("dim 0"), cat("dim ", hl.dim()));
      return holds(witt_canonical(hl) == witt_canonical(qq), witt_canonical(qq).to_string(),
                   witt_canonical(hl).to_string());
    });
    rec.run(in("gw_relations"), [&]() -> Outcome {
      // <b,-b> is isometric to <1,-1>.
      GwElement z = x + GwElement::of(b) + GwElement::of(b * minus_one(f)) - GwElement::hyperbolic(f);
      if (auto o = same(x, z)) return o;
      // <b> = <1> in GW only when b is a square.
      bool eq = gw_equal(x + GwElement::of(b), x + GwElement::one(f));
      return holds(eq == b.is_one(), b.is_one() ? "equal" : "distinct", eq ? "equal" : "distinct");
    });
  }
}

// ---------------------------------------------------------------- pi

void suite_pi(const SuiteConfig& c, Recorder& rec) {
  if (c.samples <= 0) return;
  Rng rng(c.seed);
  const int dmax = std::max(2, c.d_max);
  auto vanishing = [&](const Field& f, int n, const std::vector<SquareClass>& slots) {
    rec.run([=] { return cat("field=", f->to_string(), " n=", n, " slots=", slots_str(slots), " check=pi_vanishing"); },
            [&]() -> Outcome {
              GwElement g = gpfister(slots);
              auto pi = pi_series(n, dmax, g);
              if (auto o = same(g, pi[1])) return o;
              for (int d = 2; d <= dmax; ++d)
                if (auto o = same(GwElement(f), pi[d])) return std::make_pair(cat("0 at d=", d), o->second);
              return ok();
            });
  };
  // Exhaustive over the small towers.
  for (const Field& f : sample_fields(c.field)) {
    if (f->depth() > 2) continue;
    auto classes = enumerate_sc(f);
    for (int n = 1; n <= c.n_max; ++n) {
      std::vector<SquareClass> cur;
      multisets(classes, n, 0, cur, [&](const std::vector<SquareClass>& s) { vanishing(f, n, s); });
    }
  }
  // Random at depth 3.
  std::vector<Field> deep;
  if (c.field.empty()) {
    for (const char* t : {"C((t1))((t2))((t3))", "R((t1))((t2))((t3))", "F3((t1))((t2))((t3))",
                          "F5((t1))((t2))((t3))"})
      deep.push_back(parse_field(t));
  } else if (parse_field(c.field)->depth() >= 3) {
    deep.push_back(parse_field(c.field));
  }
  for (const Field& f : deep)
    for (int s = 0; s < c.samples; ++s) {
      int n = rng.range(1, c.n_max);
      vanishing(f, n, random_slots(f, n, rng));
    }
  // Divided-sum formula against elementary symmetric sums.
  auto fields = sample_fields(c.field);
  const int nmax = std::min(c.n_max, 2), dsum = std::min(dmax, 4);
  for (int s = 0; s < c.samples; ++s) {
    Field f = pick(fields, rng);
    int n = rng.range(1, nmax), r = rng.range(1, 4);
    std::vector<GwElement> phis;
    std::vector<std::vector<SquareClass>> slots;
    for (int i = 0; i < r; ++i) {
      slots.push_back(random_slots(f, n, rng));
      phis.push_back(gpfister(slots.back()));
    }
    rec.run(
        [=] {
          std::string s = cat("field=", f->to_string(), " n=", n, " terms=");
          for (auto& v : slots) s += slots_str(v);
          return s + " check=divided_sum";
        },
        [&]() -> Outcome {
          GwElement sum(f);
          for (auto& p : phis) sum += p;
          auto pi = pi_series(n, dsum, sum);
          // e_d by the recursion E_i(t) = E_{i-1}(t) (1 + phi_i t).
          std::vector<GwElement> e(dsum + 1, GwElement(f));
          e[0] = GwElement::one(f);
          for (auto& p : phis)
            for (int d = dsum; d >= 1; --d) e[d] += e[d - 1] * p;
          for (int d = 0; d <= dsum; ++d)
            if (auto o = same(e[d], pi[d])) return std::make_pair(cat(o->first, " at d=", d), o->second);
          if (!is_in_In(pi[dsum], n * dsum)) return std::make_pair(cat("in I^", n * dsum), "outside");
          return ok();
        });
  }
}

// ---------------------------------------------------------------- f-axioms

void suite_f_axioms(const SuiteConfig& c, Recorder& rec) {
  Rng rng(c.seed);
  auto fields = sample_fields(c.field);
  const int D = c.d_max;
  for (int s = 0; s < c.samples; ++s) {
    Field f = pick(fields, rng);
    int n = rng.range(1, c.n_max);
    GwElement q = random_In(f, n, rng.range(1, 3), rng);
    GwElement q2 = random_In(f, n, rng.range(1, 3), rng);
    auto slots = random_slots(f, n, rng);
    GwElement phi = pfister(slots);
    for (Mode m : modes(c)) {
      auto in = [=](const char* what) {
        return [=] {
          return cat("field=", f->to_string(), " mode=", mode_name(m), " n=", n, " q=", q.to_string(),
                     " q'=", q2.to_string(), " phi=", slots_str(slots), " check=", what);
        };
      };
      rec.run(in("unit_and_degree_one"), [&]() -> Outcome {
        auto v = eval_f_all(n, 1, q, m);
        if (auto o = same(AValue::one(f, m), v[0])) return o;
        AValue fn = m == Mode::W ? AValue(witt_canonical(q)) : AValue(e_n(witt_canonical(q), n));
        return same(fn, v[1]);
      });
      rec.run(in("sum_rule"), [&]() -> Outcome {
        auto a = eval_f_all(n, D, q, m), b = eval_f_all(n, D, q2, m), ab = eval_f_all(n, D, q + q2, m);
        for (int d = 0; d <= D; ++d) {
          AValue rhs = AValue::zero(f, m);
          for (int k = 0; k <= d; ++k) rhs = rhs + a[k] * b[d - k];
          if (auto o = same(rhs, ab[d])) return std::make_pair(cat(o->first, " at d=", d), o->second);
        }
        return ok();
      });
      rec.run(in("pfister_vanishing"), [&]() -> Outcome {
        auto v = eval_f_all(n, D, phi, m);
        if (auto o = same(AValue::pfister_value(f, slots, m), v[1])) return o;
        for (int d = 2; d <= D; ++d)
          if (auto o = vanishes(v[d])) return std::make_pair(cat("0 at d=", d), o->second);
        return ok();
      });
      rec.run(in("minus_pfister"), [&]() -> Outcome {
        auto v = eval_f_all(n, D, -phi, m);
        AValue fphi = AValue::pfister_value(f, slots, m);
        for (int d = 1; d <= D; ++d) {
          AValue want = sign_pow(f, m, d) * AValue::eps_pow(f, m, n * (d - 1)) * fphi;
          if (auto o = same(want, v[d])) return std::make_pair(cat(o->first, " at d=", d), o->second);
        }
        return ok();
      });
      rec.run(in("filtration"), [&]() -> Outcome {
        auto v = eval_f_all(n, D, q, m);
        for (int d = 0; d <= D; ++d) {
          bool in_filtration = m == Mode::W ? is_in_In(v[d].witt(), n * d) : v[d].coh().is_homogeneous(n * d);
          if (!in_filtration) return std::make_pair(cat("degree ", n * d, " at d=", d), v[d].to_string());
        }
        return ok();
      });
    }
  }
}

// ---------------------------------------------------------------- g-bounds

void suite_g_bounds(const SuiteConfig& c, Recorder& rec) {
  Rng rng(c.seed);
  auto fields = sample_fields(c.field);
  for (int s = 0; s < c.samples; ++s) {
    Field f = pick(fields, rng);
    int n = rng.range(1, c.n_max), ns = rng.range(0, 2), nt = rng.range(0, 2);
    GwElement q = random_pfister_combo(f, n, ns, nt, rng);
    int bound = 2 * std::max(ns, nt);
    for (Mode m : modes(c)) {
      auto in = [=](const char* what) {
        return [=] {
          return cat("field=", f->to_string(), " mode=", mode_name(m), " n=", n, " s=", ns, " t=", nt,
                     " q=", q.to_string(), " check=", what);
        };
      };
      rec.run(in("g_vanishing_above_2max"), [&]() -> Outcome {
        auto g = eval_g_all(n, bound + 2, q, m);
        for (int d = bound + 1; d <= bound + 2; ++d)
          if (auto o = vanishes(g[d])) return std::make_pair(cat("0 at d=", d), o->second);
        return ok();
      });
      if (f->base == BaseKind::QuadClosed)
        rec.run(in("f_vanishing_above_2max"), [&]() -> Outcome {
          auto v = eval_f_all(n, bound + 2, q, m);
          for (int d = bound + 1; d <= bound + 2; ++d)
            if (auto o = vanishes(v[d])) return std::make_pair(cat("0 at d=", d), o->second);
          return ok();
        });
    }
    int dim = 2 * rng.range(1, 3);
    GwElement form = random_form(f, dim, rng);
    for (Mode m : modes(c))
      rec.run([=] { return cat("field=", f->to_string(), " mode=", mode_name(m), " form=", form.to_string(),
                               " check=fixed_dim_g_vanishing"); },
              [&]() -> Outcome {
                auto g = eval_g_all(1, dim + 2, form, m);
                for (int d = dim + 1; d <= dim + 2; ++d)
                  if (auto o = vanishes(g[d])) return std::make_pair(cat("0 at d=", d), o->second);
                return ok();
              });
  }
  if (c.samples <= 0) return;
  Field real = c.field.empty() ? parse_field("R((t1))((t2))") : parse_field(c.field);
  if (real->base != BaseKind::RealClosed) return;
  for (Mode m : modes(c)) {
    // f is unbounded over real towers: f^d(-<<-1>>) != 0 for every d.
    rec.run([=] { return cat("field=", real->to_string(), " mode=", mode_name(m), " q=-pf(-1) check=f_unbounded"); },
            [&]() -> Outcome {
              auto v = eval_f(1, 3, -pfister({minus_one(real)}), m);
              return holds(!v.is_zero(), "nonzero", v.to_string());
            });
    // Some q = sum phi_i - sum psi_i has g^{2 max(s,t)}(q) != 0.
    Rng wrng(c.seed + 1);
    std::string witness;
    rec.run([=, &witness] { return cat("field=", real->to_string(), " mode=", mode_name(m), " check=g_bound_attained"); },
            [&]() -> Outcome {
              std::vector<std::pair<GwElement, std::pair<int, int>>> cand;
              if (real->depth() >= 2)
                cand.push_back({pfister({var_class(real, 0)}) - pfister({var_class(real, 1)}), {1, 1}});
              for (int i = 0; i < c.samples; ++i) {
                int ns = wrng.range(0, 2), nt = wrng.range(0, 2);
                cand.push_back({random_pfister_combo(real, 1, ns, nt, wrng), {ns, nt}});
              }
              for (auto& [q, st] : cand) {
                int d = 2 * std::max(st.first, st.second);
                if (d == 0) continue;
                if (!eval_g(1, d, q, m).is_zero()) return ok();
              }
              return std::make_pair(std::string("some nonzero g^{2max}"), std::string("all zero"));
            });
  }
}

// ---------------------------------------------------------------- classify

void suite_classify(const SuiteConfig& c, Recorder& rec) {
  Rng rng(c.seed);
  auto fields = sample_fields(c.field);
  // Over a real tower eps^j never vanishes, so evaluation at 0 is faithful.
  Field faithful = parse_field("R((t1))");
  const int support = std::min(std::max(c.d_max, 1), 8);
  for (int s = 0; s < c.samples; ++s) {
    for (Mode m : modes(c)) {
      int n = rng.range(1, c.n_max);
      Basis b = rng.coin() ? Basis::G : Basis::F;
      SymbolicInvariant alpha = random_invariant(n, m, b, support, false, rng);
      auto in = [=](const char* what) {
        return [=] { return cat("mode=", mode_name(m), " n=", n, " alpha=", alpha.to_string(), " check=", what); };
      };
      rec.run(in("coefficient_extraction"), [&]() -> Outcome {
        auto g = to_basis(alpha, Basis::G);
        auto coeffs = extract_coefficients(alpha, support);
        GwElement zero(faithful);
        for (int d = 0; d <= support; ++d) {
          if (!(coeffs[d] == g.coeff(d)))
            return std::make_pair(cat(g.coeff(d).to_string(), " at d=", d), coeffs[d].to_string());
          int plus = (d + 1) / 2, minus = d / 2;
          AValue at0 = evaluate(shifted(alpha, plus, minus), zero);
          if (auto o = same(g.coeff(d).evaluate(faithful), at0))
            return std::make_pair(cat(o->first, " at d=", d), o->second);
        }
        return ok();
      });
      rec.run(in("basis_round_trip"), [&]() -> Outcome {
        auto back = to_basis(change_basis(alpha), b);
        return holds(back.coeffs() == alpha.coeffs(), alpha.to_string(), back.to_string());
      });
      rec.run(in("shift_relations"), [&]() -> Outcome {
        auto p = phi(alpha, 1), q = phi(alpha, -1);
        auto pq = phi(p, -1), qp = phi(q, 1);
        if (auto o = same(pq, qp)) return o;
        if (auto o = same(UCoeff::eps_pow(m, n) * pq, p - q)) return o;
        // The shifts computed in either basis agree.
        auto other = change_basis(alpha);
        if (auto o = same(p, phi(other, 1))) return o;
        return same(q, phi(other, -1));
      });
      rec.run(in("shift_kernel"), [&]() -> Outcome {
        bool killed = phi(alpha, 1).is_zero() || phi(alpha, -1).is_zero();
        return holds(!killed || alpha.is_constant(), "constant", alpha.to_string());
      });
      Field f = pick(fields, rng);
      GwElement qf = random_In(f, n, rng.range(0, 2), rng);
      auto slots = random_slots(f, n, rng);
      rec.run([=] { return cat("field=", f->to_string(), " mode=", mode_name(m), " n=", n, " alpha=",
                               alpha.to_string(), " q=", qf.to_string(), " phi=", slots_str(slots),
                               " check=shift_pointwise"); },
              [&]() -> Outcome {
                GwElement ph = pfister(slots);
                AValue fphi = AValue::pfister_value(f, slots, m);
                AValue base = evaluate(alpha, qf);
                if (auto o = same(base + fphi * evaluate(phi(alpha, 1), qf), evaluate(alpha, qf + ph))) return o;
                return same(base - fphi * evaluate(phi(alpha, -1), qf), evaluate(alpha, qf - ph));
              });
    }
  }
}

// ---------------------------------------------------------------- product

void suite_product(const SuiteConfig& c, Recorder& rec) {
  Rng rng(c.seed);
  auto fields = sample_fields(c.field);
  const int half = std::max(1, c.d_max / 2);
  for (int s = 0; s < c.samples; ++s) {
    Field f = pick(fields, rng);
    int n = rng.range(1, c.n_max);
    for (Mode m : modes(c)) {
      SymbolicInvariant a = random_invariant(n, m, rng.coin() ? Basis::F : Basis::G, half, false, rng);
      SymbolicInvariant b = random_invariant(n, m, rng.coin() ? Basis::F : Basis::G, half, false, rng);
      GwElement q = random_In(f, n, rng.range(0, 2), rng);
      auto in = [=](const char* what) {
        return [=] {
          return cat("field=", f->to_string(), " mode=", mode_name(m), " n=", n, " a=", a.to_string(),
                     " b=", b.to_string(), " q=", q.to_string(), " check=", what);
        };
      };
      rec.run(in("pointwise"), [&]() -> Outcome {
        return same(evaluate(a, q) * evaluate(b, q), evaluate(product(a, b), q));
      });
      rec.run(in("shift_compatibility"), [&]() -> Outcome {
        auto ab = product(a, b);
        auto en = UCoeff::eps_pow(m, n);
        for (int e : {1, -1}) {
          auto pa = phi(a, e), pb = phi(b, e);
          auto rhs = product(pa, b) + product(a, pb) + UCoeff::from_int(m, e) * (en * product(pa, pb));
          if (auto o = same(rhs, phi(ab, e))) return o;
        }
        return ok();
      });
    }
  }
  if (c.samples <= 0) return;
  for (int s = 0; s <= 16; ++s)
    for (int t = 0; t <= 16; ++t)
      rec.run([=] { return cat("s=", s, " t=", t, " check=multinomial_parity"); }, [&]() -> Outcome {
        for (int d = std::max(s, t); d <= s + t; ++d) {
          bool odd = multinomial_C(d, d - s, d - t) % 2 != 0;
          if (odd != (d == (s | t))) return std::make_pair(cat("odd iff d=", s | t), cat("d=", d, odd ? " odd" : " even"));
        }
        return ok();
      });
  // In H the product of two f-basis elements is a single term.
  for (int n = 1; n <= c.n_max; ++n)
    for (int s = 0; s <= 8; ++s)
      for (int t = 0; t <= 8; ++t)
        rec.run([=] { return cat("n=", n, " s=", s, " t=", t, " check=cohomological_product"); }, [&]() -> Outcome {
          auto fs = SymbolicInvariant::basis_element(n, Mode::H, Basis::F, s);
          auto ft = SymbolicInvariant::basis_element(n, Mode::H, Basis::F, t);
          auto want = UCoeff::eps_pow(Mode::H, n * (s & t)) *
                      SymbolicInvariant::basis_element(n, Mode::H, Basis::F, s | t);
          return same(want, product(fs, ft));
        });
}

// ---------------------------------------------------------------- restrict

void suite_restrict(const SuiteConfig& c, Recorder& rec) {
  Rng rng(c.seed);
  auto fields = sample_fields(c.field);
  const int ntop = std::max(1, c.n_max - 1);
  for (int s = 0; s < c.samples; ++s) {
    Field f = pick(fields, rng);
    int n = rng.range(1, ntop);
    GwElement q = random_In(f, n + 1, rng.range(0, 2), rng);
    for (Mode m : modes(c)) {
      auto in = [=](const char* what) {
        return [=] {
          return cat("field=", f->to_string(), " mode=", mode_name(m), " n=", n, " q=", q.to_string(), " check=", what);
        };
      };
      rec.run(in("f_basis_pointwise"), [&]() -> Outcome {
        auto direct = eval_f_all(n, c.d_max, q, m);
        for (int d = 0; d <= c.d_max; ++d) {
          auto r = restrict(SymbolicInvariant::basis_element(n, m, Basis::F, d));
          if (auto o = same(direct[d], evaluate(r, q))) return std::make_pair(cat(o->first, " at d=", d), o->second);
        }
        return ok();
      });
      SymbolicInvariant a = random_invariant(n, m, rng.coin() ? Basis::F : Basis::G, c.d_max, false, rng);
      rec.run([=] { return cat("field=", f->to_string(), " mode=", mode_name(m), " n=", n, " q=", q.to_string(),
                               " alpha=", a.to_string(), " check=combination_pointwise"); },
              [&]() -> Outcome { return same(evaluate(a, q), evaluate(restrict(a), q)); });
    }
  }
  if (c.samples <= 0) return;
  // u_{2d}^{(1)} restricted to I^2 is u_{2d}^{(2)}.
  for (int d = 0; 2 * d <= std::max(c.d_max, 2); ++d)
    rec.run([=] { return cat("d=", d, " check=u_restriction"); }, [&]() -> Outcome {
      auto r = restrict(SymbolicInvariant::basis_element(1, Mode::H, Basis::F, 2 * d));
      return same(SymbolicInvariant::basis_element(2, Mode::H, Basis::F, d), r);
    });
}

// ---------------------------------------------------------------- simil

// psi_tilde(sum a_d g^d) = 0 iff eps^{n-1} a_{2i+2} = delta a_{2i+1} for all i.
bool similarity_criterion(const SymbolicInvariant& a) {
  auto g = to_basis(a, Basis::G);
  Mode m = a.mode();
  auto en1 = UCoeff::eps_pow(m, a.n() - 1);
  auto dl = UCoeff::from_int(m, delta(m));
  for (int i = 0; 2 * i + 1 <= g.max_degree(); ++i)
    if (!(en1 * g.coeff(2 * i + 2) == dl * g.coeff(2 * i + 1))) return false;
  return true;
}

void suite_simil(const SuiteConfig& c, Recorder& rec) {
  Rng rng(c.seed);
  auto fields = sample_fields(c.field);
  for (int s = 0; s < c.samples; ++s) {
    Field f = pick(fields, rng);
    int n = rng.range(1, c.n_max);
    GwElement q = random_In(f, n, rng.range(0, 2), rng);
    SquareClass lam = random_sc(f, rng);
    auto slots = random_slots(f, n, rng);
    for (Mode m : modes(c)) {
      auto in = [=](const char* what) {
        return [=] {
          return cat("field=", f->to_string(), " mode=", mode_name(m), " n=", n, " q=", q.to_string(),
                     " lambda=", lam.to_string(), " phi=", slots_str(slots), " check=", what);
        };
      };
      rec.run(in("g_generators_pointwise"), [&]() -> Outcome {
        GwElement lq = q.scaled(lam);
        AValue l = AValue::sym(lam, m);
        for (int d = 0; d <= c.d_max; ++d) {
          auto g = SymbolicInvariant::basis_element(n, m, Basis::G, d);
          auto want = evaluate(g, q) + l * evaluate(psi_tilde(g), q);
          if (auto o = same(want, evaluate(g, lq))) return std::make_pair(cat(o->first, " at d=", d), o->second);
        }
        return ok();
      });
      SymbolicInvariant a = random_invariant(n, m, rng.coin() ? Basis::F : Basis::G, c.d_max, false, rng);
      rec.run([=] { return cat("mode=", mode_name(m), " n=", n, " alpha=", a.to_string(), " check=psi_square"); },
              [&]() -> Outcome {
                auto p = psi_tilde(a);
                return same(UCoeff::from_int(m, -delta(m)) * p, psi_tilde(p));
              });
      rec.run([=] { return cat("field=", f->to_string(), " mode=", mode_name(m), " n=", n, " q=", q.to_string(),
                               " lambda=", lam.to_string(), " alpha=", a.to_string(), " check=combination_pointwise"); },
              [&]() -> Outcome {
                return same(evaluate(a, q) + AValue::sym(lam, m) * evaluate(psi_tilde(a), q),
                            evaluate(a, q.scaled(lam)));
              });
      rec.run(in("general_pfister"), [&]() -> Outcome {
        GwElement lphi = pfister(slots).scaled(lam);
        AValue fphi = AValue::pfister_value(f, slots, m);
        auto v = eval_f_all(n, c.d_max, lphi, m);
        for (int d = 2; d <= c.d_max; ++d) {
          AValue want = sign_pow(f, m, d) * AValue::eps_pow(f, m, n * (d - 1) - 1) * AValue::sym(lam, m) * fphi;
          if (auto o = same(want, v[d])) return std::make_pair(cat(o->first, " at d=", d), o->second);
        }
        return ok();
      });
      // Both directions of the similarity criterion: a random sequence, and
      // one built to satisfy the criterion.
      SymbolicInvariant k(n, m, Basis::G);
      for (int i = 0; 2 * i + 2 <= c.d_max; ++i) {
        UCoeff top = random_ucoeff(m, rng);
        if (m == Mode::W) {
          k.add(2 * i + 2, top);
          k.add(2 * i + 1, UCoeff::eps_pow(m, n - 1) * top);
        } else {
          k.add(2 * i + 1, top);
        }
      }
      for (const auto& x : {a, k})
        rec.run([=] { return cat("mode=", mode_name(m), " n=", n, " alpha=", x.to_string(), " check=similarity_criterion"); },
                [&]() -> Outcome {
                  bool crit = similarity_criterion(x), zero = psi_tilde(x).is_zero();
                  return holds(crit == zero, crit ? "psi_tilde = 0" : "psi_tilde != 0", psi_tilde(x).to_string());
                });
    }
  }
  if (c.samples <= 0) return;
  for (Mode m : modes(c))
    for (int n = 1; n <= c.n_max; ++n)
      for (int d = 0; d <= std::max(c.d_max, 8); ++d)
        rec.run([=] { return cat("mode=", mode_name(m), " n=", n, " d=", d, " check=closed_form_f"); },
                [&]() -> Outcome {
                  auto f = SymbolicInvariant::basis_element(n, m, Basis::F, d);
                  return same(psi_tilde(f), psi_tilde_f_closed_form(f));
                });
}

// ---------------------------------------------------------------- ram

void suite_ram(const SuiteConfig& c, Recorder& rec) {
  Rng rng(c.seed);
  std::vector<Field> fields;
  for (const Field& f : sample_fields(c.field))
    if (f->depth() >= 1) fields.push_back(f);
  if (fields.empty()) return;
  for (int s = 0; s < c.samples; ++s) {
    Field f = pick(fields, rng);
    int n = rng.range(1, c.n_max);
    GwElement q = embed(f, random_In(residue_field(f), n, rng.range(0, 3), rng));
    for (Mode m : modes(c))
      rec.run([=] { return cat("field=", f->to_string(), " mode=", mode_name(m), " n=", n, " q=", q.to_string(),
                               " check=unramified_residue"); },
              [&]() -> Outcome {
                auto fv = eval_f_all(n, c.d_max, q, m);
                auto gv = eval_g_all(n, c.d_max, q, m);
                for (int d = 0; d <= c.d_max; ++d) {
                  if (auto o = vanishes(residue(fv[d]))) return std::make_pair(cat("0 for f at d=", d), o->second);
                  if (auto o = vanishes(residue(gv[d]))) return std::make_pair(cat("0 for g at d=", d), o->second);
                }
                return ok();
              });
    int d = rng.range(1, std::min(c.n_max, 3));
    GwElement x = random_In(f, d, rng.range(1, 3), rng);
    rec.run([=] { return cat("field=", f->to_string(), " d=", d, " q=", x.to_string(), " check=residue_square"); },
            [&]() -> Outcome {
              WittClass w = witt_canonical(x);
              return same(e_n(second_residue(w), d - 1), coh_residue(e_n(w, d)));
            });
  }
}

// ---------------------------------------------------------------- fixed-dim

// Signed discriminant (-1)^{m(m-1)/2} det of a form.
SquareClass signed_disc(const GwElement& x) {
  const Field& f = x.field();
  SquareClass d = SquareClass::one(f);
  std::int64_t m = 0;
  for (std::uint32_t b = 0; b < x.raw().size(); ++b) {
    std::int64_t k = x.raw()[b];
    if (k % 2) d = d * SquareClass(f, b);
    m += k;
  }
  if ((m * (m - 1) / 2) % 2) d = d * minus_one(f);
  return d;
}

void suite_fixed_dim(const SuiteConfig& c, Recorder& rec) {
  Rng rng(c.seed);
  auto fields = sample_fields(c.field);
  for (int s = 0; s < c.samples; ++s) {
    Field f = pick(fields, rng);
    int dim = 2 * rng.range(1, 3);
    GwElement q = random_form(f, dim, rng);
    for (Mode m : modes(c)) {
      auto in = [=](const char* what) {
        return [=] { return cat("field=", f->to_string(), " mode=", mode_name(m), " q=", q.to_string(), " check=", what); };
      };
      rec.run(in("f_expansion"), [&]() -> Outcome {
        auto direct = eval_f_all(1, c.d_max, q, m);
        for (int d = 0; d <= c.d_max; ++d)
          if (auto o = same(direct[d], eval_fixed_dim_f(d, q, m)))
            return std::make_pair(cat(o->first, " at d=", d), o->second);
        return ok();
      });
      rec.run(in("g_expansion"), [&]() -> Outcome {
        auto direct = eval_g_all(1, c.d_max, q, m);
        for (int d = 0; d <= c.d_max; ++d)
          if (auto o = same(direct[d], eval_fixed_dim_g(d, q, m)))
            return std::make_pair(cat(o->first, " at d=", d), o->second);
        return ok();
      });
    }
    rec.run([=] { return cat("field=", f->to_string(), " q=", q.to_string(), " check=lambda_expansion"); },
            [&]() -> Outcome {
              for (int d = 0; d <= c.d_max; ++d) {
                AValue want = eval_sw(d, q, Mode::W);
                AValue got(witt_canonical(sw_from_lambda(d, q)));
                if (auto o = same(want, got)) return std::make_pair(cat(o->first, " at d=", d), o->second);
              }
              return ok();
            });
    if (f->base != BaseKind::RealClosed)
      rec.run([=] { return cat("field=", f->to_string(), " q=", q.to_string(), " check=disc_series"); },
              [&]() -> Outcome {
                auto v = eval_f_all(1, dim + 4, q, Mode::W);
                AValue sum = AValue::zero(f, Mode::W);
                std::vector<AValue> partial;
                for (int d = 0; d <= dim + 4; ++d) {
                  sum = d % 2 ? sum - v[d] : sum + v[d];
                  partial.push_back(sum);
                }
                for (int d = dim + 2; d <= dim + 4; ++d)
                  if (auto o = same(partial[dim + 2], partial[d])) return std::make_pair(cat("stable at d=", d), o->second);
                return same(AValue(witt_canonical(GwElement::of(signed_disc(q)))), sum);
              });
  }
}

// ---------------------------------------------------------------- coh-ops

void suite_coh_ops(const SuiteConfig& c, Recorder& rec) {
  if (c.samples <= 0) return;
  Rng rng(c.seed);
  auto fields = sample_fields(c.field);
  for (const Field& f : fields) {
    if (f->depth() > 2) continue;
    auto classes = enumerate_sc(f);
    for (const auto& a : classes)
      rec.run([=] { return cat("field=", f->to_string(), " a=", a.to_string(), " check=symbol_relations"); },
              [&]() -> Outcome {
                for (const auto& b : classes)
                  if (auto o = same(degree_one(a) + degree_one(b), degree_one(a * b))) return o;
                if (auto o = same(symbol(f, {minus_one(f), a}), symbol(f, {a, a}))) return o;
                return same(CohClass(f), symbol(f, {a, a * minus_one(f)}));
              });
    for (int n = 1; n <= std::min(c.n_max, 3); ++n) {
      std::vector<SquareClass> cur;
      multisets(classes, n, 0, cur, [&](const std::vector<SquareClass>& s) {
        rec.run([=] { return cat("field=", f->to_string(), " slots=", slots_str(s), " check=e_n_pfister"); },
                [&]() -> Outcome { return same(symbol(f, s), e_n(witt_canonical(pfister(s)), n)); });
      });
    }
  }
  for (int s = 0; s < c.samples; ++s) {
    Field f = pick(fields, rng);
    int n = rng.range(1, c.n_max);
    GwElement x = random_In(f, n, rng.range(0, 3), rng), y = random_In(f, n, rng.range(0, 3), rng);
    rec.run([=] { return cat("field=", f->to_string(), " n=", n, " x=", x.to_string(), " y=", y.to_string(),
                             " check=e_n_additive"); },
            [&]() -> Outcome {
              auto ex = e_n(witt_canonical(x), n), ey = e_n(witt_canonical(y), n);
              return same(ex + ey, e_n(witt_canonical(x + y), n));
            });
    if (f->depth() == 0) continue;
    Field k = residue_field(f);
    SquareClass a = random_sc(k, rng);
    rec.run([=] { return cat("field=", f->to_string(), " a=", a.to_string(), " check=residue_of_symbol"); },
            [&]() -> Outcome {
              SquareClass up(f, a.bits()), t = var_class(f, f->depth() - 1);
              return same(degree_one(a), coh_residue(symbol(f, {t, up})));
            });
  }
}

// ---------------------------------------------------------------- delta1

void suite_delta1(const SuiteConfig& c, Recorder& rec) {
  Rng rng(c.seed);
  auto fields = sample_fields(c.field);
  const int dl = std::min(c.d_max, 4);
  for (int s = 0; s < c.samples; ++s) {
    Field f = pick(fields, rng);
    // Lemma: in H, f_n^d(q + phi) = f_n^d(q) + eps^{n-1} e_{n+1}(phi) (f_n^d)^{++}(q).
    {
      int n = rng.range(1, std::min(c.n_max, 2));
      GwElement q = random_In(f, n, rng.range(0, 2), rng);
      auto slots = random_slots(f, n + 1, rng);
      rec.run([=] { return cat("field=", f->to_string(), " n=", n, " q=", q.to_string(), " phi=", slots_str(slots),
                               " check=plus_plus_lemma"); },
              [&]() -> Outcome {
                GwElement ph = pfister(slots);
                AValue e = AValue::eps_pow(f, Mode::H, n - 1) * AValue::pfister_value(f, slots, Mode::H);
                for (int d = 0; d <= c.d_max; ++d) {
                  auto a = SymbolicInvariant::basis_element(n, Mode::H, Basis::F, d);
                  auto app = phi(phi(a, 1), 1);
                  auto want = evaluate(a, q) + e * evaluate(app, q);
                  if (auto o = same(want, evaluate(a, q + ph))) return std::make_pair(cat(o->first, " at d=", d), o->second);
                }
                return ok();
              });
    }
    // Delta^1 is independent of the factorization.
    {
      int n = rng.range(1, c.n_max);
      FactorizedForm x{f, n + 1, {random_sc(f, rng)}, {}};
      bool shared = rng.coin();
      SquareClass common = random_sc(f, rng);
      int terms = rng.range(1, 3);
      for (int i = 0; i < terms; ++i) {
        auto sl = random_slots(f, n, rng);
        if (shared) sl[0] = common;
        x.cofactor.push_back(PfTerm{rng.coin() ? 1 : -1, random_sc(f, rng), sl});
      }
      auto alts = alt_factorizations(x, 4, rng);
      const char* family = f->base == BaseKind::QuadClosed ? "C" : f->base == BaseKind::RealClosed ? "R" : "F";
      // One case per pair, every degree and target.
      for (std::size_t i = 1; i < alts.size(); ++i) {
        const FactorizedForm& y = alts[i];
        rec.run([=] { return cat("field=", f->to_string(), " n=", n, " x=(", x.factor[0].to_string(), "; ",
                                 x.cofactor_form().to_string(), ") y=(", y.factor[0].to_string(), "; ",
                                 y.cofactor_form().to_string(), ") check=delta1_", family); },
                [&]() -> Outcome {
                  for (Mode m : modes(c))
                    for (int d = 1; d <= dl; ++d) {
                      auto a = SymbolicInvariant::basis_element(n, m, Basis::F, d);
                      if (auto o = same(delta_t_eval(x, a, 1), delta_t_eval(y, a, 1)))
                        return std::make_pair(cat(o->first, " at d=", d, " mode=", mode_name(m)), o->second);
                    }
                  return ok();
                });
      }
    }
    // Divisibility, descent by omega_t and its compatibility with restriction and similitudes.
    {
      int n = rng.range(2, std::max(2, c.n_max)), t = rng.range(1, n - 1);
      auto fs = random_slots(f, t, rng);
      GwElement q = random_In(f, n - t, rng.range(0, 2), rng);
      GwElement x = pfister(fs) * q;
      SquareClass lam = random_sc(f, rng);
      for (Mode m : modes(c)) {
        auto in = [=](const char* what) {
          return [=] {
            return cat("field=", f->to_string(), " mode=", mode_name(m), " n=", n, " t=", t, " phi=", slots_str(fs),
                       " q=", q.to_string(), " lambda=", lam.to_string(), " check=", what);
          };
        };
        AValue ft = AValue::pfister_value(f, fs, m);
        rec.run(in("divisibility"), [&]() -> Outcome {
          auto lhs = eval_f_all(n, c.d_max, x, m);
          auto low = eval_f_all(n - t, c.d_max, q, m);
          for (int d = 1; d <= c.d_max; ++d) {
            AValue want = AValue::eps_pow(f, m, t * (d - 1)) * ft * low[d];
            if (auto o = same(want, lhs[d])) return std::make_pair(cat(o->first, " at d=", d), o->second);
          }
          return ok();
        });
        SymbolicInvariant a = random_invariant(n, m, rng.coin() ? Basis::F : Basis::G, c.d_max, true, rng);
        rec.run(in("omega_descent"), [&]() -> Outcome {
          auto w = omega_t(a, t);
          return same(ft * evaluate(w, q), evaluate(a, x));
        });
        rec.run(in("omega_restrict_commute"), [&]() -> Outcome {
          auto lhs = omega_t(restrict(a), t), rhs = restrict(omega_t(a, t));
          if (auto o = same(lhs, rhs)) return o;
          GwElement q1 = random_In(f, n - t + 1, 1, rng);
          return same(evaluate(lhs, q1), evaluate(rhs, q1));
        });
        rec.run(in("omega_similitude_commute"), [&]() -> Outcome {
          if (auto o = same(omega_t(psi_tilde(a), t), psi_tilde(omega_t(a, t)))) return o;
          return same(ft * evaluate(omega_t(a, t), q.scaled(lam)), evaluate(a, x.scaled(lam)));
        });
      }
    }
    // Factorization lemma with certified slots.
    {
      SquareClass a = random_sc(f, rng), b = random_sc(f, rng);
      std::vector<std::pair<SquareClass, SquareClass>> terms;
      SquareClass mab = minus_one(f) * a * b;
      for (int i = rng.range(1, 3); i > 0; --i)
        terms.push_back({random_sc(f, rng), rng.coin() ? mab : SquareClass::one(f)});
      int k = rng.range(1, 4);
      rec.run([=] { return cat("field=", f->to_string(), " a=", a.to_string(), " b=", b.to_string(), " k=", k,
                               " check=factor_lemma"); },
              [&]() -> Outcome { return holds(lemma_factor_check(a, b, terms, k)); });
    }
  }
}

using SuiteFn = void (*)(const SuiteConfig&, Recorder&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"series", suite_series},     {"lambda", suite_lambda},   {"pi", suite_pi},
      {"f-axioms", suite_f_axioms}, {"g-bounds", suite_g_bounds}, {"classify", suite_classify},
      {"product", suite_product},   {"restrict", suite_restrict}, {"simil", suite_simil},
      {"ram", suite_ram},           {"fixed-dim", suite_fixed_dim}, {"coh-ops", suite_coh_ops},
      {"delta1", suite_delta1}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (auto& [n, fn] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  return std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

Report run_suite(const std::string& name, const SuiteConfig& cfg) {
  for (auto& [n, fn] : registry()) {
    if (n != name) continue;
    Report r;
    r.suite = name;
    r.config = cfg;
    Recorder rec(r);
    fn(cfg, rec);
    return r;
  }
  throw DomainError("unknown suite: " + name);
}

}  // namespace gwinv
