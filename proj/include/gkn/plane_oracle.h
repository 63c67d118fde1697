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

// Exact test of whether points of P^2, each with a vanishing order, impose
// independent conditions on plane curves of degree d.
//
// A point with multiplicity s contributes the s(s+1)/2 partial derivatives of
// order < s of every degree-d monomial, taken in an affine chart through the
// point. The conditions are independent iff the resulting matrix has rank
// min(#conditions, h^0(O(d))).

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gkn/common.h"
#include "gkn/counter_rng.h"

namespace gkn {

// A point (x:y:z) stored with its last nonzero coordinate equal to 1.
class PlanePoint {
 public:
  PlanePoint(Rational x, Rational y, Rational z);

  const std::array<Rational, 3>& coords() const { return coords_; }
  int canonical_chart() const { return chart_; }

  // Representative whose coordinate `chart` is 1. Requires that coordinate to
  // be nonzero.
  std::array<Rational, 3> InChart(int chart) const;

  bool operator==(const PlanePoint& other) const {
    return coords_ == other.coords_;
  }

  std::string ToString() const;  // "(x:y:z)"

 private:
  std::array<Rational, 3> coords_;
  int chart_;
};

struct PointCondition {
  PlanePoint point;
  int multiplicity = 1;
};

struct PointConditionScheme {
  int degree = 0;
  std::vector<PointCondition> points;

  // Sum of s(s+1)/2.
  Integer ConditionCount() const;
};

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

// h^0(O_P2(d)) = (d+1)(d+2)/2.
Integer PlaneSectionCount(const Integer& degree);

// Exponents (a, b, c) of x^a y^b z^c of total degree d, graded-lex x > y > z.
std::vector<std::array<int, 3>> Monomials(int degree);

// Jet rows of one point in the given chart (coordinate `chart` set to 1).
RationalMatrix JetRows(const PlanePoint& point, int multiplicity, int degree,
                       int chart);

// Rows for every point in its canonical chart; throws InputError on duplicate
// points, degree < 0 or multiplicity < 1.
RationalMatrix EvaluationMatrix(const PointConditionScheme& scheme);

// Rank over Q. Rows are scaled to integers, then reduced by fraction-free
// (Bareiss) elimination.
std::size_t ExactRank(const RationalMatrix& matrix);
std::size_t BareissRank(IntegerMatrix matrix);

struct RankReport {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  Integer expected_conditions;
  Integer h0;
  bool independent = false;
  Integer residual_dimension;  // h0 - rank
};

RankReport IndependentConditions(const PointConditionScheme& scheme);

// `count` distinct affine points (x:y:1) with integer x, y in
// [-bound, bound], all with the same multiplicity.
PointConditionScheme RandomConfiguration(int count, int multiplicity,
                                         int degree,
                                         const Integer& coordinate_bound,
                                         CounterRng& rng);
PointConditionScheme RandomConfiguration(int count, int multiplicity,
                                         int degree,
                                         const Integer& coordinate_bound,
                                         uint64_t seed);

// Rank reports for `trials` random configurations; trial i uses the stream
// CounterRng(seed).Split(i). Trials run concurrently and are returned in
// trial order.
std::vector<RankReport> RandomRankTrials(int count, int multiplicity,
                                         int degree,
                                         const Integer& coordinate_bound,
                                         int trials, uint64_t seed);

struct SeveriVerification {
  Integer n;
  Integer k;
  int degree = 0;  // n - 3 - k
  int delta = 0;   // plane Severi bound = h^0(O(degree))
  int trials = 0;
  uint64_t seed = 0;
  std::string rng_algorithm;
  Integer coordinate_bound;
  int independent_trials = 0;  // rank == delta with delta points
  int capped_trials = 0;       // rank == h^0 with delta + 1 points
  std::size_t max_rank_over_capacity = 0;
};

inline constexpr long kDefaultCoordinateBound = 100;

SeveriVerification VerifyPlaneSeveri(const Integer& n, const Integer& k,
                                     int trials, uint64_t seed,
                                     const Integer& coordinate_bound =
                                         Integer(kDefaultCoordinateBound));

}  // namespace gkn
