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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwinv/target.hpp"

namespace gwinv {

struct SuiteConfig {
  std::string field;  // empty: the standard sample towers
  int prec = 32;
  int n_max = 3;
  int d_max = 6;
  int samples = 100;
  std::uint64_t seed = 0;
  std::optional<Mode> mode;  // both targets when unset
};

struct Failure {
  std::string inputs;
  std::string expected;
  std::string got;
};

struct Report {
  std::string suite;
  SuiteConfig config;
  long cases_total = 0;
  long cases_failed = 0;
  std::optional<Failure> first_failure;
  // Per check group: {cases, failures}. Groups are the check= labels.
  std::map<std::string, std::pair<long, long>> checks;

  bool passed() const { return cases_failed == 0; }
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// Throws DomainError for an unknown suite name.
Report run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace gwinv
