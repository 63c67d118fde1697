// Copyright 2026 The gkn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gkn {

using Integer = mpz_class;
using Rational = mpq_class;

// Malformed or out-of-domain input. Maps to CLI exit status 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed. Maps to CLI exit status 2.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Parses an optionally signed decimal integer of arbitrary length.
Integer ParseInteger(std::string_view text);

// Parses "p", "p/q" or a finite decimal such as "-1.25" into a canonical
// rational.
Rational ParseRational(std::string_view text);

// Checked narrowing; throws InputError naming `what` when out of range.
int64_t ToInt64(const Integer& value, std::string_view what);

Integer ISqrt(const Integer& value);  // floor(sqrt(value)), value >= 0
bool IsPerfectSquare(const Integer& value);

inline int Sign(const Integer& value) { return sgn(value); }

// floor(a / b) for b > 0.
Integer FloorDiv(const Integer& a, const Integer& b);

inline std::string ToString(const Integer& value) { return value.get_str(); }
std::string ToString(const Rational& value);  // "p" or "p/q"

}  // namespace gkn
