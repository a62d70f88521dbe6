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

#include <stdexcept>
#include <string>

namespace gwinv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands live over different coefficient rings or fields.
struct RingMismatch : Error {
  using Error::Error;
};

// Inner series of a composition has a nonzero constant term.
struct CompositionDomain : Error {
  using Error::Error;
};

// Linear coefficient is not a unit.
struct InversionError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

// Argument is not in the required power of the fundamental ideal.
struct MembershipError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// An identity that holds by construction failed; indicates an arithmetic bug.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace gwinv
