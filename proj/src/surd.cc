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

#include "gkn/surd.h"

#include <cmath>

namespace gkn {

int SignOfSurd(const Integer& u, const Integer& v, const Integer& s) {
  if (s < 0) throw InvariantViolation("negative radicand");
  const int su = sgn(u);
  const int sv = (s == 0) ? 0 : sgn(v);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // Opposite signs: the larger magnitude wins.
  Integer lhs = u * u;
  Integer rhs = v * v * s;
  if (lhs == rhs) return 0;
  return lhs > rhs ? su : sv;
}

QuadraticSurd::QuadraticSurd(Integer a, Integer b, Integer radicand,
                             Integer denominator)
    : a_(std::move(a)),
      b_(std::move(b)),
      s_(std::move(radicand)),
      c_(std::move(denominator)) {
  if (s_ < 0) throw InvariantViolation("negative radicand " + s_.get_str());
  if (c_ <= 0) throw InvariantViolation("nonpositive surd denominator");
}

QuadraticSurd QuadraticSurd::FromInteger(const Integer& n) {
  return QuadraticSurd(n, 0, 0, 1);
}

std::optional<Rational> QuadraticSurd::AsRational() const {
  if (b_ == 0 || s_ == 0) {
    Rational q(a_, c_);
    q.canonicalize();
    return q;
  }
  if (!IsPerfectSquare(s_)) return std::nullopt;
  Rational q(a_ + b_ * ISqrt(s_), c_);
  q.canonicalize();
  return q;
}

int QuadraticSurd::Compare(const Rational& q) const {
  // (a + b sqrt s)/c - p/r  has the sign of  (r a - p c) + r b sqrt s.
  const Integer& p = q.get_num();
  const Integer& r = q.get_den();
  return SignOfSurd(r * a_ - p * c_, r * b_, s_);
}

int QuadraticSurd::Compare(const QuadraticSurd& other) const {
  // x - y has the sign of  u + p sqrt(s1) - q sqrt(s2)  after clearing the
  // positive denominators.
  Integer u = a_ * other.c_ - other.a_ * c_;
  Integer p = b_ * other.c_;
  Integer q = other.b_ * c_;
  const Integer& s1 = s_;
  const Integer& s2 = other.s_;
  const int left = SignOfSurd(u, p, s1);  // L = u + p sqrt(s1)
  const int right = SignOfSurd(0, q, s2);  // R = q sqrt(s2)
  if (left != right) return left > right ? 1 : -1;
  if (left == 0) return 0;
  // Same sign: compare L^2 with R^2.  L^2 - R^2 = (u^2 + p^2 s1 - q^2 s2)
  // + 2 u p sqrt(s1).
  const int squares =
      SignOfSurd(u * u + p * p * s1 - q * q * s2, 2 * u * p, s1);
  return left > 0 ? squares : -squares;
}

Integer QuadraticSurd::Floor() const {
  // floor((a + y)/c) = floor((a + floor(y))/c) for integer c > 0.
  Integer y;
  Integer scaled = b_ * b_ * s_;
  Integer root = ISqrt(scaled);
  if (b_ >= 0) {
    y = root;
  } else {
    y = (root * root == scaled) ? Integer(-root) : Integer(-root - 1);
  }
  return FloorDiv(a_ + y, c_);
}

Integer QuadraticSurd::Ceil() const {
  QuadraticSurd negated(-a_, -b_, s_, c_);
  return -negated.Floor();
}

double QuadraticSurd::Approx() const {
  return (a_.get_d() + b_.get_d() * std::sqrt(s_.get_d())) / c_.get_d();
}

std::string QuadraticSurd::ToString() const {
  std::string surd;
  if (b_ == 1) {
    surd = "+sqrt(" + s_.get_str() + ")";
  } else if (b_ == -1) {
    surd = "-sqrt(" + s_.get_str() + ")";
  } else if (b_ != 0) {
    surd = (b_ > 0 ? "+" : "") + b_.get_str() + "*sqrt(" + s_.get_str() + ")";
  }
  std::string numerator = a_.get_str() + surd;
  if (c_ == 1) return surd.empty() ? numerator : "(" + numerator + ")";
  return "(" + numerator + ")/" + c_.get_str();
}

}  // namespace gkn
