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

// Numerical sufficiency criteria for geometric k-normality of a curve C in
// |D| with delta nodes and cusps on a surface S with hyperplane class H.
//
// The criteria are one-directional. A failed check means "no conclusion";
// only the Brill-Noether obstruction produces a negative verdict.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkn/common.h"
#include "gkn/lattice.h"
#include "gkn/surd.h"

namespace gkn {

enum class Hypothesis {
  kDegree,           // D.H > k H^2
  kResidualSquare,   // (D-2kH)^2 > 0
  kResidualProduct,  // D.(D-2kH) > 0
  kHodge,            // nu(D,kH) < 4 (D.(D-2kH) - 4)
  kFlags,            // declared k-normality and h^1(O_S(kH)) = 0
};

// Stable tag used in traces and JSON output, e.g. "D.H>kH^2".
std::string HypothesisTag(Hypothesis h);

// One inequality lhs > rhs or lhs < rhs, evaluated exactly.
struct InequalityCheck {
  Hypothesis hypothesis;
  Integer lhs;
  Integer rhs;
  bool holds;
};

// The four numerical inequalities, in order.
std::vector<InequalityCheck> CheckHypotheses(const SurfaceModel& surface,
                                             const DivisorClass& d,
                                             const Integer& k);

// f = (t + sqrt(s)) / 8 with t = D.(D-2kH) and s = D^2 (D-2kH)^2.
struct BoundReport {
  Integer t;
  Integer s;
  QuadraticSurd bound;
  // Largest integer strictly below the bound, if nonnegative.
  std::optional<Integer> max_admissible_delta;

  bool Admits(const Integer& delta) const { return bound.Compare(delta) > 0; }
};

// Requires (D-2kH)^2 > 0 and D.(D-2kH) > 0; throws InputError otherwise.
BoundReport DeltaBound(const SurfaceModel& surface, const DivisorClass& d,
                       const Integer& k);

enum class Outcome {
  kSufficient,
  kHypothesisFailed,
  kBoundFailed,
  kInapplicable,
};

std::string OutcomeName(Outcome outcome);

struct GknVerdict {
  Outcome outcome = Outcome::kInapplicable;
  Integer k;
  Integer delta;
  std::vector<Hypothesis> failed;      // kHypothesisFailed
  std::optional<BoundReport> bound;    // whenever the bound is defined
  std::string reason;                  // kInapplicable
  std::vector<InequalityCheck> trace;  // all four inequalities
  // Whether D-kH is big and nef, in which case the vanishing certified by the
  // criterion is also necessary. Unset on user lattices.
  std::optional<bool> vanishing_is_necessary;
};

// Sufficient condition: flags hold, all four inequalities pass and
// delta < f. Throws InputError for k < 1 or delta < 0.
GknVerdict GknSufficient(const SurfaceModel& surface, const DivisorClass& d,
                         const Integer& k, const Integer& delta);

// Specialization to D = nH on a complete intersection.
struct CiBoundReport {
  bool n_at_least_2k_plus_1;
  bool degree_large_enough;  // deg(S) > 4 / (n(n-2k))
  bool admissible;
  Rational bound;            // n(n-2k) deg(S) / 4
  std::optional<Integer> max_delta;
};

CiBoundReport CiBound(const Integer& n, const Integer& k,
                      const Integer& surface_degree);

// F(x) = 16 x^2 - 4 t x + nu, whose negative interval (alpha, beta) is
// where a destabilizing configuration would have to live.
struct InstabilityQuadratic {
  Integer a, b, c;  // 16, -4t, nu
  QuadraticSurd alpha;
  QuadraticSurd beta;
  std::optional<Integer> integer_witness;  // smallest integer in (alpha, beta)

  Integer Evaluate(const Integer& x) const { return (a * x + b) * x + c; }
};

// Computes the roots from the discriminant t^2 - 4 nu and verifies that beta
// coincides with DeltaBound's f (throws InvariantViolation otherwise).
InstabilityQuadratic ComputeInstabilityQuadratic(const SurfaceModel& surface,
                                                 const DivisorClass& d,
                                                 const Integer& k);

// c1^2 - 4 c2 = (D-kH)^2 - 4 delta0.
Integer BogomolovDiscriminant(const SurfaceModel& surface,
                              const DivisorClass& d, const Integer& k,
                              const Integer& delta0);

// rho(g, r, d) = g - (r+1)(r - d + g). Requires g >= 0, r >= 1, d >= 1.
Integer BrillNoetherRho(const Integer& g, const Integer& r, const Integer& d);

enum class ObstructionOutcome {
  kNotGeometrically2Normal,
  kNoObstruction,
  kInapplicable,
};

std::string ObstructionOutcomeName(ObstructionOutcome outcome);

struct ObstructionReport {
  ObstructionOutcome outcome = ObstructionOutcome::kInapplicable;
  std::optional<Integer> genus;    // geometric genus g
  std::optional<Integer> ambient;  // r
  Integer degree;                  // D.H
  std::optional<Integer> rho;
  std::vector<std::string> failed_hypotheses;
};

// Geometric 2-normality forces rho <= 0 when S is linearly normal and
// 2-normal, h^1(O_S(iH)) = 0 for i = 0, 1, 2 and D-3H is big and nef.
ObstructionReport Obstruction2Normal(const SurfaceModel& surface,
                                     const DivisorClass& d,
                                     const Integer& delta);

struct ApplicabilityReport {
  bool applies;
  std::vector<std::string> failed_clauses;
};

// Whether "h^1(I_N(D+K-kH)) = 0" is equivalent to 0-regularity of
// I_N(D+K-(k-1)H) and to geometric k-normality: needs D-(k+1)H big and nef
// and h^1(O_S(kH)) = 0. Throws InputError on user lattices.
ApplicabilityReport ZeroRegularityEquivalence(const SurfaceModel& surface,
                                              const DivisorClass& d,
                                              const Integer& k);

// The k with K = kH, if it exists and is positive.
std::optional<Integer> CanonicalMultiple(const SurfaceModel& surface);

// When K = kH the criterion for k certifies that the nodes impose independent
// conditions on |D|, i.e. [C] is a regular point of the Severi variety.
GknVerdict SeveriRegularitySufficient(const SurfaceModel& surface,
                                      const DivisorClass& d,
                                      const Integer& delta);

struct PlaneSeveriBound {
  Integer bound;     // (n^2 - (3+2k) n + 2 + k^2 + 3k) / 2
  Integer h0_check;  // (n-k-1)(n-k-2)/2 = h^0(O(n-k-3))
};

// Requires k in {1, 2, 3} and n - 3 - k >= 0.
PlaneSeveriBound ComputePlaneSeveriBound(const Integer& n, const Integer& k);

// Castelnuovo's bound for a non-degenerate smooth curve of degree d in P^r.
Integer CastelnuovoMaxGenus(const Integer& d, const Integer& r);

}  // namespace gkn
