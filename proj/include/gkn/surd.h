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

#include <optional>
#include <string>

#include "gkn/common.h"

namespace gkn {

// Sign of u + v*sqrt(s), s >= 0, decided without rounding.
int SignOfSurd(const Integer& u, const Integer& v, const Integer& s);

// The real number (a + b*sqrt(s)) / c with c > 0 and s >= 0.
//
// All comparisons reduce to integer sign tests by squaring, so values that
// sit exactly on a boundary (a bound equal to an integer) compare correctly.
class QuadraticSurd {
 public:
  QuadraticSurd(Integer a, Integer b, Integer radicand, Integer denominator);
  static QuadraticSurd FromInteger(const Integer& n);

  const Integer& rational_part() const { return a_; }
  const Integer& surd_coefficient() const { return b_; }
  const Integer& radicand() const { return s_; }
  const Integer& denominator() const { return c_; }

  // Set when b == 0 or the radicand is a perfect square.
  std::optional<Rational> AsRational() const;
  bool IsRational() const { return AsRational().has_value(); }

  int Compare(const QuadraticSurd& other) const;  // -1, 0, 1
  int Compare(const Rational& q) const;
  int Sign() const { return SignOfSurd(a_, b_, s_); }

  Integer Floor() const;
  Integer Ceil() const;

  // Approximate value for display only.
  double Approx() const;

  // "(a+sqrt(s))/c" style; coefficients other than +-1 are printed as
  // "b*sqrt(s)".
  std::string ToString() const;

 private:
  Integer a_, b_, s_, c_;
};

}  // namespace gkn
