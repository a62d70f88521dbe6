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

// gwinv_cli: series dumps, invariant evaluation and identity-suite verification.
//
// Exit codes: 0 success, 1 internal error, 2 parse or usage error (including
// an unknown suite), 3 membership failure, 4 a verified suite has failures.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwinv/errors.hpp"
#include "gwinv/field.hpp"
#include "gwinv/invariants.hpp"
#include "gwinv/series.hpp"
#include "gwinv/suites.hpp"
#include "gwinv/witt.hpp"

namespace {

using gwinv::Int;
using json = nlohmann::json;

json coeff_json(const Int& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

std::string row(const gwinv::ZSeries& f, const char* sep) {
  std::string s;
  for (int d = 0; d <= f.precision(); ++d) s += (d ? sep : "") + f[d].str();
  return s;
}

int cmd_series(int n, int prec, const std::string& format) {
  if (n < 1) throw gwinv::DomainError("--n must be at least 1");
  if (prec < 0) throw gwinv::DomainError("--prec must be nonnegative");
  auto x = gwinv::build_x(n, prec);
  auto h = gwinv::build_h(n, prec);
  auto [a, b] = gwinv::even_odd_split(x);
  const std::pair<const char*, const gwinv::ZSeries*> rows[] = {{"x", &x}, {"h", &h}, {"a", &a}, {"b", &b}};
  if (format == "json") {
    json j = {{"n", n}, {"prec", prec}};
    for (auto& [name, s] : rows) {
      json arr = json::array();
      for (const auto& c : s->coeffs()) arr.push_back(coeff_json(c));
      j[name] = arr;
    }
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "series";
    for (int d = 0; d <= prec; ++d) std::cout << ",t" << d;
    std::cout << "\n";
    for (auto& [name, s] : rows) std::cout << name << "," << row(*s, ",") << "\n";
  } else {
    for (auto& [name, s] : rows) std::cout << name << "_" << n << ": " << row(*s, ",") << "\n";
  }
  return 0;
}

int cmd_eval(const std::string& inv, const std::string& form, const std::string& field_text,
             const std::string& mode_text, const std::string& format) {
  auto f = gwinv::parse_field(field_text);
  auto m = gwinv::parse_mode(mode_text);
  auto alpha = gwinv::parse_invariant(inv, m);
  auto q = gwinv::parse_form(f, form);
  if (!gwinv::is_in_In(q, alpha.n()))
    throw gwinv::MembershipError("form is not in I^" + std::to_string(alpha.n()));
  auto v = gwinv::evaluate(alpha, q);
  if (format == "json") {
    std::cout << json{{"invariant", alpha.to_string()}, {"field", f->to_string()}, {"mode", gwinv::mode_name(m)},
                      {"form", q.to_string()}, {"value", v.to_string()}}
                     .dump()
              << "\n";
  } else if (format == "csv") {
    std::cout << "invariant,field,mode,value\n"
              << '"' << alpha.to_string() << "\"," << f->to_string() << "," << gwinv::mode_name(m) << ",\""
              << v.to_string() << "\"\n";
  } else {
    std::cout << v.to_string() << "\n";
  }
  return 0;
}

json report_json(const gwinv::Report& r) {
  const auto& c = r.config;
  json cfg = {{"field", c.field}, {"prec", c.prec},       {"n_max", c.n_max}, {"d_max", c.d_max},
              {"samples", c.samples}, {"seed", c.seed}, {"mode", c.mode ? gwinv::mode_name(*c.mode) : "both"}};
  json failure = nullptr;
  if (r.first_failure)
    failure = {{"inputs", r.first_failure->inputs}, {"expected", r.first_failure->expected},
               {"got", r.first_failure->got}};
  return {{"suite", r.suite},
          {"config", cfg},
          {"cases_total", r.cases_total},
          {"cases_failed", r.cases_failed},
          {"first_failure", failure}};
}

int cmd_verify(const std::string& suite, const gwinv::SuiteConfig& cfg, const std::string& format) {
  if (!gwinv::is_suite(suite)) {
    std::cerr << "unknown suite: " << suite << "\n";
    return 2;
  }
  if (!cfg.field.empty()) gwinv::parse_field(cfg.field);
  auto r = gwinv::run_suite(suite, cfg);
  if (format == "json") {
    std::cout << report_json(r).dump() << "\n";
  } else if (format == "csv") {
    std::cout << "suite,cases_total,cases_failed,first_failure_inputs\n"
              << r.suite << "," << r.cases_total << "," << r.cases_failed << ",\""
              << (r.first_failure ? r.first_failure->inputs : "") << "\"\n";
  } else {
    std::cout << r.suite << ": " << (r.cases_total - r.cases_failed) << "/" << r.cases_total << " cases passed\n";
    if (r.first_failure)
      std::cout << "first failure: " << r.first_failure->inputs << "\n  expected: " << r.first_failure->expected
                << "\n  got:      " << r.first_failure->got << "\n";
  }
  return r.passed() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of the fundamental filtration of the Witt ring"};
  app.require_subcommand(1);
  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };

  int n = 1, prec = 8;
  auto* series = app.add_subcommand("series", "Print x_n, h_n and the even and odd parts of x_n");
  series->add_option("--n", n, "Level n >= 1");
  series->add_option("--prec", prec, "Truncation degree");
  add_format(series);

  std::string inv, form, field, mode = "W";
  auto* eval = app.add_subcommand("eval", "Evaluate an invariant literal on a form");
  eval->add_option("--inv", inv, "Invariant, e.g. g[2,3] + eps^2*f[2,1]")->required();
  eval->add_option("--form", form, "Form, e.g. pf(t1) + pf(t2)")->required();
  eval->add_option("--field", field, "Field, e.g. R((t1))((t2))")->required();
  eval->add_option("--mode", mode, "Target: W or H");
  add_format(eval);

  std::string suite, vmode;
  gwinv::SuiteConfig cfg;
  auto* verify = app.add_subcommand("verify", "Run an identity suite");
  verify->add_option("--suite", suite, "Suite name")->required();
  verify->add_option("--field", cfg.field, "Restrict to one field");
  verify->add_option("--prec", cfg.prec, "Series precision")->check(CLI::NonNegativeNumber);
  verify->add_option("--n-max", cfg.n_max, "Largest filtration level")->check(CLI::PositiveNumber);
  verify->add_option("--d-max", cfg.d_max, "Largest degree")->check(CLI::PositiveNumber);
  verify->add_option("--samples", cfg.samples, "Random samples")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", cfg.seed, "Seed");
  verify->add_option("--mode", vmode, "Target: W or H (default both)");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*series) return cmd_series(n, prec, format);
    if (*eval) return cmd_eval(inv, form, field, mode, format);
    if (!vmode.empty()) cfg.mode = gwinv::parse_mode(vmode);
    return cmd_verify(suite, cfg, format);
  } catch (const gwinv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const gwinv::MembershipError& e) {
    std::cerr << "membership failure: " << e.what() << "\n";
    return 3;
  } catch (const gwinv::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
