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

#include "gkn/common.h"

#include <algorithm>
#include <cctype>

namespace gkn {
namespace {

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Integer ParseInteger(std::string_view text) {
  std::string_view s = Trim(text);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (!AllDigits(digits)) {
    throw InputError("not an integer: '" + std::string(text) + "'");
  }
  std::string normalized(s.front() == '+' ? s.substr(1) : s);
  return Integer(normalized, 10);
}

Rational ParseRational(std::string_view text) {
  std::string_view s = Trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = ParseInteger(s.substr(0, slash));
    Integer den = ParseInteger(s.substr(slash + 1));
    if (den == 0) {
      throw InputError("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      whole.remove_prefix(1);
    }
    if ((!whole.empty() && !AllDigits(whole)) || !AllDigits(frac)) {
      throw InputError("not a rational number: '" + std::string(text) + "'");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer num(std::string(whole.empty() ? "0" : whole) + std::string(frac),
                10);
    Rational q(negative ? Integer(-num) : num, scale);
    q.canonicalize();
    return q;
  }
  return Rational(ParseInteger(s));
}

int64_t ToInt64(const Integer& value, std::string_view what) {
  if (!value.fits_slong_p()) {
    throw InputError(std::string(what) + " out of range: " + value.get_str());
  }
  return value.get_si();
}

Integer ISqrt(const Integer& value) {
  if (value < 0) {
    throw InvariantViolation("square root of negative integer");
  }
  Integer root;
  mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
  return root;
}

bool IsPerfectSquare(const Integer& value) {
  return value >= 0 && mpz_perfect_square_p(value.get_mpz_t()) != 0;
}

Integer FloorDiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::string ToString(const Rational& value) {
  if (value.get_den() == 1) {
    return value.get_num().get_str();
  }
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace gkn
