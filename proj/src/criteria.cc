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

#include "gkn/criteria.h"

namespace gkn {
namespace {

// Largest integer strictly below the bound, or nullopt when that is negative.
std::optional<Integer> LargestBelow(const QuadraticSurd& bound) {
  Integer candidate = bound.Ceil() - 1;
  if (candidate < 0) return std::nullopt;
  return candidate;
}

std::optional<Integer> LargestBelow(const Rational& bound) {
  Integer ceil;
  mpz_cdiv_q(ceil.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  Integer candidate = ceil - 1;
  if (candidate < 0) return std::nullopt;
  return candidate;
}

std::string MinusMultipleOfH(const Integer& m) {
  return m == 1 ? "D-H" : "D-" + m.get_str() + "H";
}

}  // namespace

std::string HypothesisTag(Hypothesis h) {
  switch (h) {
    case Hypothesis::kDegree:
      return "D.H>kH^2";
    case Hypothesis::kResidualSquare:
      return "(D-2kH)^2>0";
    case Hypothesis::kResidualProduct:
      return "D.(D-2kH)>0";
    case Hypothesis::kHodge:
      return "nu<4(t-4)";
    case Hypothesis::kFlags:
      return "flags";
  }
  return "unknown";
}

std::vector<InequalityCheck> CheckHypotheses(const SurfaceModel& surface,
                                             const DivisorClass& d,
                                             const Integer& k) {
  RequirePositiveK(k);
  const DivisorClass& h = surface.hyperplane();
  const DivisorClass residual = d - Integer(2 * k) * h;
  Integer dh = Intersect(surface, d, h);
  Integer residual_sq = SelfIntersection(surface, residual);
  Integer t = Intersect(surface, d, residual);
  Integer nu = HodgeNumber(surface, d, k);
  Integer k_deg = k * surface.degree();
  Integer hodge_rhs = 4 * (t - 4);

  std::vector<InequalityCheck> trace;
  trace.push_back({Hypothesis::kDegree, dh, k_deg, dh > k_deg});
  trace.push_back(
      {Hypothesis::kResidualSquare, residual_sq, Integer(0), residual_sq > 0});
  trace.push_back({Hypothesis::kResidualProduct, t, Integer(0), t > 0});
  trace.push_back({Hypothesis::kHodge, nu, hodge_rhs, nu < hodge_rhs});
  return trace;
}

BoundReport DeltaBound(const SurfaceModel& surface, const DivisorClass& d,
                       const Integer& k) {
  RequirePositiveK(k);
  const DivisorClass residual = d - Integer(2 * k) * surface.hyperplane();
  Integer residual_sq = SelfIntersection(surface, residual);
  Integer t = Intersect(surface, d, residual);
  if (residual_sq <= 0 || t <= 0) {
    throw InputError(
        "hypotheses (D-2kH)^2 > 0 and D.(D-2kH) > 0 violated; bound undefined");
  }
  Integer s = SelfIntersection(surface, d) * residual_sq;
  if (s < 0) {
    throw InputError("D^2 (D-2kH)^2 = " + s.get_str() +
                     " is negative; bound undefined");
  }
  QuadraticSurd bound(t, 1, s, 8);
  std::optional<Integer> max_delta = LargestBelow(bound);
  return BoundReport{std::move(t), std::move(s), std::move(bound),
                     std::move(max_delta)};
}

std::string OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kSufficient:
      return "SufficientGkn";
    case Outcome::kHypothesisFailed:
      return "HypothesisFailed";
    case Outcome::kBoundFailed:
      return "BoundFailed";
    case Outcome::kInapplicable:
      return "Inapplicable";
  }
  return "unknown";
}

GknVerdict GknSufficient(const SurfaceModel& surface, const DivisorClass& d,
                         const Integer& k, const Integer& delta) {
  RequirePositiveK(k);
  if (delta < 0) {
    throw InputError("delta must be nonnegative, got " + delta.get_str());
  }
  GknVerdict verdict;
  verdict.k = k;
  verdict.delta = delta;
  verdict.trace = CheckHypotheses(surface, d, k);
  for (const InequalityCheck& check : verdict.trace) {
    if (!check.holds) verdict.failed.push_back(check.hypothesis);
  }
  if (!surface.k_normal(k) || !surface.h1_kH_vanishes(k)) {
    verdict.failed.push_back(Hypothesis::kFlags);
  }
  if (surface.is_builtin()) {
    verdict.vanishing_is_necessary =
        IsBigAndNef(surface, d - k * surface.hyperplane());
  }
  if (verdict.trace[1].holds && verdict.trace[2].holds) {
    try {
      verdict.bound = DeltaBound(surface, d, k);
    } catch (const InputError&) {
      // D^2 < 0: no bound, and the Hodge inequality cannot hold either.
    }
  }
  if (!verdict.failed.empty()) {
    verdict.outcome = Outcome::kHypothesisFailed;
  } else if (!verdict.bound) {
    throw InvariantViolation("hypotheses passed but the bound is undefined");
  } else if (verdict.bound->Admits(delta)) {
    verdict.outcome = Outcome::kSufficient;
  } else {
    verdict.outcome = Outcome::kBoundFailed;
  }
  return verdict;
}

CiBoundReport CiBound(const Integer& n, const Integer& k,
                      const Integer& surface_degree) {
  if (n < 1 || k < 1 || surface_degree < 1) {
    throw InputError("n, k and deg(S) must be positive integers");
  }
  Integer product = n * (n - 2 * k);
  CiBoundReport report;
  report.n_at_least_2k_plus_1 = n >= 2 * k + 1;
  report.degree_large_enough = product > 0 && surface_degree * product > 4;
  report.admissible = report.n_at_least_2k_plus_1 && report.degree_large_enough;
  report.bound = Rational(product * surface_degree, 4);
  report.bound.canonicalize();
  report.max_delta = LargestBelow(report.bound);
  return report;
}

InstabilityQuadratic ComputeInstabilityQuadratic(const SurfaceModel& surface,
                                                 const DivisorClass& d,
                                                 const Integer& k) {
  BoundReport bound = DeltaBound(surface, d, k);
  const Integer& t = bound.t;
  Integer nu = HodgeNumber(surface, d, k);
  // Roots of 16x^2 - 4tx + nu are (t +- sqrt(t^2 - 4 nu)) / 8.
  Integer quarter_disc = t * t - 4 * nu;
  if (quarter_disc < 0) {
    throw InvariantViolation("instability quadratic has no real roots: t^2 - 4nu = " +
                             quarter_disc.get_str());
  }
  InstabilityQuadratic q{Integer(16),
                         Integer(-4 * t),
                         nu,
                         QuadraticSurd(t, -1, quarter_disc, 8),
                         QuadraticSurd(t, 1, quarter_disc, 8),
                         std::nullopt};
  if (q.beta.Compare(bound.bound) != 0) {
    throw InvariantViolation("larger root " + q.beta.ToString() +
                             " differs from bound " + bound.bound.ToString());
  }
  Integer candidate = q.alpha.Floor() + 1;
  if (q.beta.Compare(Rational(candidate)) > 0) q.integer_witness = candidate;
  return q;
}

Integer BogomolovDiscriminant(const SurfaceModel& surface,
                              const DivisorClass& d, const Integer& k,
                              const Integer& delta0) {
  RequirePositiveK(k);
  DivisorClass c1 = d - k * surface.hyperplane();
  return SelfIntersection(surface, c1) - 4 * delta0;
}

Integer BrillNoetherRho(const Integer& g, const Integer& r, const Integer& d) {
  if (g < 0) throw InputError("g must be >= 0, got " + g.get_str());
  if (r < 1) throw InputError("r must be >= 1, got " + r.get_str());
  if (d < 1) throw InputError("d must be >= 1, got " + d.get_str());
  return g - (r + 1) * (r - d + g);
}

std::string ObstructionOutcomeName(ObstructionOutcome outcome) {
  switch (outcome) {
    case ObstructionOutcome::kNotGeometrically2Normal:
      return "NotG2N";
    case ObstructionOutcome::kNoObstruction:
      return "NoObstruction";
    case ObstructionOutcome::kInapplicable:
      return "Inapplicable";
  }
  return "unknown";
}

ObstructionReport Obstruction2Normal(const SurfaceModel& surface,
                                     const DivisorClass& d,
                                     const Integer& delta) {
  ObstructionReport report;
  auto& failed = report.failed_hypotheses;
  if (!surface.k_normal(1)) failed.push_back("S not linearly normal");
  if (!surface.k_normal(2)) failed.push_back("S not 2-normal");
  for (int i = 0; i <= 2; ++i) {
    if (!surface.h1_kH_vanishes(i)) {
      failed.push_back("h^1(O_S(" + std::to_string(i) + "H)) != 0");
    }
  }
  DivisorClass residual = d - Integer(3) * surface.hyperplane();
  if (!surface.is_builtin()) {
    failed.push_back("positivity undecidable for user lattices");
  } else if (!IsBigAndNef(surface, residual)) {
    failed.push_back("D-3H not big and nef");
  }

  report.genus = GeometricGenus(surface, d, delta);
  report.ambient = surface.ambient_dim();
  report.degree = Intersect(surface, d, surface.hyperplane());
  if (!report.ambient) {
    failed.push_back("ambient dimension unknown");
  } else if (report.degree < 1) {
    failed.push_back("deg(C) = D.H must be positive");
  } else {
    report.rho = BrillNoetherRho(*report.genus, *report.ambient, report.degree);
  }

  if (!failed.empty()) {
    report.outcome = ObstructionOutcome::kInapplicable;
  } else if (*report.rho > 0) {
    report.outcome = ObstructionOutcome::kNotGeometrically2Normal;
  } else {
    report.outcome = ObstructionOutcome::kNoObstruction;
  }
  return report;
}

ApplicabilityReport ZeroRegularityEquivalence(const SurfaceModel& surface,
                                              const DivisorClass& d,
                                              const Integer& k) {
  RequirePositiveK(k);
  ApplicabilityReport report{true, {}};
  Integer shift = k + 1;
  if (!IsBigAndNef(surface, d - shift * surface.hyperplane())) {
    report.failed_clauses.push_back(MinusMultipleOfH(shift) +
                                    " not big and nef");
  }
  if (!surface.h1_kH_vanishes(k)) {
    report.failed_clauses.push_back("h^1(O_S(" + k.get_str() + "H)) != 0");
  }
  report.applies = report.failed_clauses.empty();
  return report;
}

std::optional<Integer> CanonicalMultiple(const SurfaceModel& surface) {
  const auto& h = surface.hyperplane().coords();
  const auto& kc = surface.canonical().coords();
  std::size_t pivot = 0;
  while (pivot < h.size() && h[pivot] == 0) ++pivot;
  if (pivot == h.size()) return std::nullopt;
  if (!mpz_divisible_p(kc[pivot].get_mpz_t(), h[pivot].get_mpz_t())) {
    return std::nullopt;
  }
  Integer k = kc[pivot] / h[pivot];
  if (k < 1 || k * surface.hyperplane() != surface.canonical()) {
    return std::nullopt;
  }
  return k;
}

GknVerdict SeveriRegularitySufficient(const SurfaceModel& surface,
                                      const DivisorClass& d,
                                      const Integer& delta) {
  std::optional<Integer> k = CanonicalMultiple(surface);
  if (!k) {
    GknVerdict verdict;
    verdict.outcome = Outcome::kInapplicable;
    verdict.delta = delta;
    verdict.reason = "K_S is not a positive multiple of H";
    return verdict;
  }
  return GknSufficient(surface, d, *k, delta);
}

PlaneSeveriBound ComputePlaneSeveriBound(const Integer& n, const Integer& k) {
  if (k < 1 || k > 3) {
    throw InputError("theorem proved only for k=1,2,3 (got k=" + k.get_str() +
                     ")");
  }
  if (n - 3 - k < 0) {
    throw InputError("need n - 3 - k >= 0 (got n=" + n.get_str() +
                     ", k=" + k.get_str() + ")");
  }
  Integer numerator = n * n - (3 + 2 * k) * n + 2 + k * k + 3 * k;
  if (mpz_odd_p(numerator.get_mpz_t())) {
    throw InvariantViolation("odd numerator in plane Severi bound");
  }
  PlaneSeveriBound out{numerator / 2, (n - k - 1) * (n - k - 2) / 2};
  if (out.bound != out.h0_check) {
    throw InvariantViolation("plane Severi bound " + out.bound.get_str() +
                             " != h^0 " + out.h0_check.get_str());
  }
  return out;
}

Integer CastelnuovoMaxGenus(const Integer& d, const Integer& r) {
  if (d < 1) throw InputError("degree must be >= 1, got " + d.get_str());
  if (r < 2) throw InputError("ambient dimension must be >= 2, got " + r.get_str());
  Integer m = (d - 1) / (r - 1);
  Integer epsilon = d - 1 - m * (r - 1);
  return m * (m - 1) * (r - 1) / 2 + m * epsilon;
}

}  // namespace gkn
