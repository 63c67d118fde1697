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

#include <gtest/gtest.h>

#include <random>

#include "test_support.h"

namespace gkn {
namespace {

using testing::Quad;
using testing::RandomBuiltinSurface;
using testing::RandomDivisor;
using testing::ToQuad;
using testing::Uniform;

SurfaceModel Sextic() {
  return SurfaceModel::CompleteIntersection(3, {Integer(6)});
}

bool AllHold(const std::vector<InequalityCheck>& trace) {
  for (const auto& check : trace) {
    if (!check.holds) return false;
  }
  return true;
}

// Direct quadratic-form evaluation, written against the Gram matrix.
Integer Pair(const SurfaceModel& s, const DivisorClass& a,
             const DivisorClass& b) {
  Integer total = 0;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    for (std::size_t j = 0; j < s.rank(); ++j) {
      total += a.coords()[i] * s.gram()[i][j] * b.coords()[j];
    }
  }
  return total;
}

TEST(CheckHypothesesTest, SexticAllPass) {
  SurfaceModel s = Sextic();
  auto trace = CheckHypotheses(s, s.Multiple(8), 2);
  ASSERT_EQ(trace.size(), 4u);
  EXPECT_TRUE(AllHold(trace));
  EXPECT_EQ(trace[3].hypothesis, Hypothesis::kHodge);
  EXPECT_EQ(trace[3].lhs, 0);
  EXPECT_EQ(trace[3].rhs, 752);
}

TEST(CheckHypothesesTest, PlaneResidualSquareFails) {
  SurfaceModel p2 = SurfaceModel::ProjectivePlane();
  auto trace = CheckHypotheses(p2, p2.Multiple(4), 2);
  EXPECT_FALSE(trace[1].holds);
  EXPECT_EQ(trace[1].lhs, 0);
}

TEST(CheckHypothesesTest, QuadricThreeThree) {
  SurfaceModel q = SurfaceModel::SmoothQuadric();
  auto trace = CheckHypotheses(q, DivisorClass{3, 3}, 1);
  EXPECT_TRUE(AllHold(trace));
  EXPECT_EQ(trace[0].lhs, 6);
  EXPECT_EQ(trace[0].rhs, 2);
  EXPECT_EQ(trace[1].lhs, 2);
  EXPECT_EQ(trace[2].lhs, 6);
  EXPECT_EQ(trace[3].lhs, 0);
  EXPECT_EQ(trace[3].rhs, 8);
}

TEST(CheckHypothesesTest, Tags) {
  EXPECT_EQ(HypothesisTag(Hypothesis::kDegree), "D.H>kH^2");
  EXPECT_EQ(HypothesisTag(Hypothesis::kResidualSquare), "(D-2kH)^2>0");
  EXPECT_EQ(HypothesisTag(Hypothesis::kResidualProduct), "D.(D-2kH)>0");
  EXPECT_EQ(HypothesisTag(Hypothesis::kHodge), "nu<4(t-4)");
  EXPECT_EQ(HypothesisTag(Hypothesis::kFlags), "flags");
}

TEST(DeltaBoundTest, SexticIsSharpAtFortyEight) {
  SurfaceModel s = Sextic();
  BoundReport b = DeltaBound(s, s.Multiple(8), 2);
  EXPECT_EQ(b.t, 192);
  EXPECT_EQ(b.s, 36864);
  ASSERT_TRUE(b.bound.IsRational());
  EXPECT_EQ(*b.bound.AsRational(), Rational(48));
  ASSERT_TRUE(b.max_admissible_delta);
  EXPECT_EQ(*b.max_admissible_delta, 47);
  EXPECT_TRUE(b.Admits(47));
  EXPECT_FALSE(b.Admits(48));
}

TEST(DeltaBoundTest, QuadricThreeThree) {
  SurfaceModel q = SurfaceModel::SmoothQuadric();
  BoundReport b = DeltaBound(q, DivisorClass{3, 3}, 1);
  EXPECT_EQ(b.t, 6);
  EXPECT_EQ(b.s, 36);
  EXPECT_EQ(*b.bound.AsRational(), Rational(3, 2));
  EXPECT_EQ(*b.max_admissible_delta, 1);
}

TEST(DeltaBoundTest, RejectsDEqualsTwoKH) {
  SurfaceModel p2 = SurfaceModel::ProjectivePlane();
  EXPECT_THROW(DeltaBound(p2, p2.Multiple(4), 2), InputError);
  SurfaceModel q = SurfaceModel::SmoothQuadric();
  EXPECT_THROW(DeltaBound(q, DivisorClass{6, 6}, 3), InputError);
}

TEST(DeltaBoundTest, ProportionalClassesGiveTOverFour) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    SurfaceModel s = RandomBuiltinSurface(rng);
    long k = Uniform(rng, 1, 4);
    long n = Uniform(rng, 2 * k + 1, 40);
    BoundReport b = DeltaBound(s, s.Multiple(n), k);
    ASSERT_TRUE(b.bound.IsRational());
    EXPECT_EQ(*b.bound.AsRational(), Rational(b.t) / 4);
  }
}

TEST(GknSufficientTest, SexticVerdicts) {
  SurfaceModel s = Sextic();
  GknVerdict ok = GknSufficient(s, s.Multiple(8), 2, 47);
  EXPECT_EQ(ok.outcome, Outcome::kSufficient);
  EXPECT_EQ(ok.trace.size(), 4u);
  EXPECT_EQ(ok.vanishing_is_necessary, std::optional<bool>(true));
  GknVerdict fail = GknSufficient(s, s.Multiple(8), 2, 48);
  EXPECT_EQ(fail.outcome, Outcome::kBoundFailed);
  ASSERT_TRUE(fail.bound);
  EXPECT_EQ(*fail.bound->bound.AsRational(), Rational(48));
  EXPECT_EQ(OutcomeName(fail.outcome), "BoundFailed");
}

TEST(GknSufficientTest, SmoothCurvesPassWheneverHypothesesDo) {
  std::mt19937_64 rng(32);
  int passing = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    SurfaceModel s = RandomBuiltinSurface(rng);
    DivisorClass d = RandomDivisor(s, rng, 0, 20);
    long k = Uniform(rng, 1, 3);
    GknVerdict v = GknSufficient(s, d, k, 0);
    if (AllHold(v.trace)) {
      ++passing;
      EXPECT_EQ(v.outcome, Outcome::kSufficient) << s.Describe() << d.ToString();
    } else {
      EXPECT_EQ(v.outcome, Outcome::kHypothesisFailed);
      EXPECT_FALSE(v.failed.empty());
    }
  }
  EXPECT_GT(passing, 300);
}

TEST(GknSufficientTest, DeclaredFlagsGateTheVerdict) {
  GramMatrix gram = {{Integer(6)}};
  SurfaceModel bad = SurfaceModel::GeneralLattice(gram, DivisorClass{1},
                                                  DivisorClass{2}, {false, true});
  GknVerdict v = GknSufficient(bad, DivisorClass{8}, 2, 0);
  EXPECT_EQ(v.outcome, Outcome::kHypothesisFailed);
  ASSERT_EQ(v.failed.size(), 1u);
  EXPECT_EQ(v.failed[0], Hypothesis::kFlags);
  EXPECT_FALSE(v.vanishing_is_necessary.has_value());
}

TEST(GknSufficientTest, RejectsBadArguments) {
  SurfaceModel s = Sextic();
  EXPECT_THROW(GknSufficient(s, s.Multiple(8), 0, 1), InputError);
  EXPECT_THROW(GknSufficient(s, s.Multiple(8), 2, -1), InputError);
}

// The exact verdict must agree with a 128-bit float evaluation of f whenever
// the float is unambiguous.
TEST(GknSufficientTest, ExactnessAgainstQuadPrecision) {
  std::mt19937_64 rng(33);
  int checked = 0;
  int near_ties = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    SurfaceModel s = RandomBuiltinSurface(rng);
    DivisorClass d = RandomDivisor(s, rng, -5, 60);
    long k = Uniform(rng, 1, 4);
    DivisorClass residual = d - Integer(2 * k) * s.hyperplane();
    Integer t = Pair(s, d, residual);
    Integer residual_sq = Pair(s, residual, residual);
    Integer s_value = Pair(s, d, d) * residual_sq;
    if (t <= 0 || residual_sq <= 0 || s_value < 0) continue;
    Quad f = (ToQuad(t) + sqrt(ToQuad(s_value))) / 8;
    Quad base = floor(f);
    Integer delta(static_cast<long>(base.convert_to<double>()) +
                  Uniform(rng, -1, 1));
    if (delta < 0) delta = 0;
    Quad margin = abs(f - ToQuad(delta)) / (abs(f) + 1);
    BoundReport b = DeltaBound(s, d, k);
    EXPECT_EQ(b.t, t);
    EXPECT_EQ(b.s, s_value);
    if (margin > Quad("1e-6")) {
      EXPECT_EQ(b.Admits(delta), ToQuad(delta) < f)
          << s.Describe() << " " << d.ToString() << " k=" << k;
      ++checked;
    } else {
      ++near_ties;
      // Exact ties land here; they must be resolved as "not admitted".
      if (b.bound.Compare(Rational(delta)) == 0) EXPECT_FALSE(b.Admits(delta));
    }
  }
  EXPECT_GT(checked, 3000);
  EXPECT_GT(near_ties, 0);
}

TEST(GknSufficientTest, MonotoneInKOnCompleteIntersections) {
  std::mt19937_64 rng(34);
  int exercised = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    long r = Uniform(rng, 3, 5);
    std::vector<Integer> degrees;
    for (long i = 0; i < r - 2; ++i) degrees.emplace_back(Uniform(rng, 1, 4));
    SurfaceModel s = SurfaceModel::CompleteIntersection(r, degrees);
    long k = Uniform(rng, 2, 4);
    long n = Uniform(rng, 2 * k - 1, 30);
    long delta = Uniform(rng, 0, 400);
    GknVerdict upper = GknSufficient(s, s.Multiple(n), k, delta);
    if (upper.outcome != Outcome::kSufficient) continue;
    if (!AllHold(CheckHypotheses(s, s.Multiple(n), k - 1))) continue;
    ++exercised;
    EXPECT_EQ(GknSufficient(s, s.Multiple(n), k - 1, delta).outcome,
              Outcome::kSufficient)
        << s.Describe() << " n=" << n << " k=" << k << " delta=" << delta;
  }
  EXPECT_GT(exercised, 100);
}

TEST(CiBoundTest, Table) {
  CiBoundReport sextic = CiBound(8, 2, 6);
  EXPECT_TRUE(sextic.admissible);
  EXPECT_EQ(sextic.bound, Rational(48));
  EXPECT_EQ(*sextic.max_delta, 47);
  CiBoundReport quadric = CiBound(3, 1, 2);
  EXPECT_TRUE(quadric.admissible);
  EXPECT_EQ(quadric.bound, Rational(3, 2));
  EXPECT_EQ(*quadric.max_delta, 1);
  CiBoundReport low = CiBound(4, 2, 6);
  EXPECT_FALSE(low.n_at_least_2k_plus_1);
  EXPECT_FALSE(low.admissible);
  // n(n-2k) deg = 3 <= 4.
  CiBoundReport plane = CiBound(3, 1, 1);
  EXPECT_TRUE(plane.n_at_least_2k_plus_1);
  EXPECT_FALSE(plane.degree_large_enough);
  EXPECT_THROW(CiBound(0, 1, 1), InputError);
}

TEST(CiBoundTest, MinimalAdmissibleN) {
  for (long k = 1; k <= 20; ++k) {
    for (long d = 1; d <= 20; ++d) {
      CiBoundReport r = CiBound(2 * k + 1, k, d);
      EXPECT_EQ(r.bound, Rational((2 * k + 1) * d) / 4);
      EXPECT_GT(r.bound, 0);
    }
  }
}

TEST(CiBoundTest, AgreesWithGeneralBoundOnCompleteIntersections) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 1000; ++trial) {
    long r = Uniform(rng, 3, 5);
    std::vector<Integer> degrees;
    for (long i = 0; i < r - 2; ++i) degrees.emplace_back(Uniform(rng, 1, 5));
    SurfaceModel s = SurfaceModel::CompleteIntersection(r, degrees);
    long k = Uniform(rng, 1, 4);
    long n = Uniform(rng, 2 * k + 1, 40);
    CiBoundReport ci = CiBound(n, k, s.degree());
    BoundReport b = DeltaBound(s, s.Multiple(n), k);
    EXPECT_EQ(b.bound.Compare(ci.bound), 0);
    EXPECT_EQ(ci.max_delta, b.max_admissible_delta);
  }
}

TEST(InstabilityQuadraticTest, Sextic) {
  SurfaceModel s = Sextic();
  InstabilityQuadratic q = ComputeInstabilityQuadratic(s, s.Multiple(8), 2);
  EXPECT_EQ(q.a, 16);
  EXPECT_EQ(q.b, -768);
  EXPECT_EQ(q.c, 0);
  EXPECT_EQ(*q.alpha.AsRational(), Rational(0));
  EXPECT_EQ(*q.beta.AsRational(), Rational(48));
  EXPECT_EQ(q.integer_witness, std::optional<Integer>(1));
  for (long x = -5; x <= 60; ++x) {
    EXPECT_EQ(q.Evaluate(x), Integer(16 * x * (x - 48)));
  }
}

TEST(InstabilityQuadraticTest, Quadric) {
  SurfaceModel q = SurfaceModel::SmoothQuadric();
  InstabilityQuadratic f = ComputeInstabilityQuadratic(q, DivisorClass{3, 3}, 1);
  EXPECT_EQ(*f.alpha.AsRational(), Rational(0));
  EXPECT_EQ(*f.beta.AsRational(), Rational(3, 2));
  EXPECT_EQ(f.integer_witness, std::optional<Integer>(1));
}

TEST(InstabilityQuadraticTest, NonRationalRoots) {
  SurfaceModel q = SurfaceModel::SmoothQuadric();
  // D = (5, 3), k = 1: t = 14, nu = 4, t^2 - 4 nu = 180.
  InstabilityQuadratic f = ComputeInstabilityQuadratic(q, DivisorClass{5, 3}, 1);
  EXPECT_FALSE(f.beta.IsRational());
  EXPECT_EQ(f.beta.radicand(), 180);
  EXPECT_EQ(f.integer_witness, std::optional<Integer>(1));
}

// Properties over random built-in data passing every inequality.
TEST(InstabilityQuadraticTest, RootsSignPatternAndWitness) {
  std::mt19937_64 rng(36);
  int exercised = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    SurfaceModel s = RandomBuiltinSurface(rng);
    DivisorClass d = RandomDivisor(s, rng, 0, 25);
    long k = Uniform(rng, 1, 3);
    if (!AllHold(CheckHypotheses(s, d, k))) continue;
    ++exercised;
    InstabilityQuadratic q = ComputeInstabilityQuadratic(s, d, k);
    BoundReport b = DeltaBound(s, d, k);
    EXPECT_EQ(q.beta.Compare(b.bound), 0);
    if (HodgeNumber(s, d, k) == 0) {
      EXPECT_EQ(q.alpha.Sign(), 0);
    }
    ASSERT_TRUE(q.integer_witness) << s.Describe() << d.ToString();
    EXPECT_LT(q.Evaluate(*q.integer_witness), 0);

    Integer lo = q.alpha.Floor() - 3;
    Integer hi = q.beta.Ceil() + 3;
    for (Integer x = lo; x <= hi; ++x) {
      Rational xr(x);
      int above_alpha = q.alpha.Compare(xr) < 0;
      int below_beta = q.beta.Compare(xr) > 0;
      bool inside = above_alpha && below_beta;
      bool outside = q.alpha.Compare(xr) > 0 || q.beta.Compare(xr) < 0;
      Integer value = q.Evaluate(x);
      if (inside) EXPECT_LT(value, 0);
      if (outside) EXPECT_GT(value, 0);
      if (!inside && !outside) EXPECT_EQ(value, 0);
    }
  }
  EXPECT_GT(exercised, 500);
}

TEST(BogomolovTest, Examples) {
  SurfaceModel s = Sextic();
  EXPECT_EQ(BogomolovDiscriminant(s, s.Multiple(8), 2, 47), 28);
  EXPECT_EQ(BogomolovDiscriminant(s, s.Multiple(8), 2, 54), 0);
  SurfaceModel p2 = SurfaceModel::ProjectivePlane();
  EXPECT_EQ(BogomolovDiscriminant(p2, p2.Multiple(4), 1, 3), -3);
}

TEST(BrillNoetherTest, Rho) {
  EXPECT_EQ(BrillNoetherRho(3, 3, 6), 3);
  for (long d = 1; d <= 30; ++d) EXPECT_EQ(BrillNoetherRho(0, d, d), 0);
  // Expansion: rho = g - (r+1)(r-d+g).
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 1000; ++trial) {
    long g = Uniform(rng, 0, 50);
    long r = Uniform(rng, 1, 20);
    long d = Uniform(rng, 1, 80);
    EXPECT_EQ(BrillNoetherRho(g, r, d),
              Integer((r + 1) * (d - r) - r * g));
  }
  EXPECT_THROW(BrillNoetherRho(-1, 3, 3), InputError);
  EXPECT_THROW(BrillNoetherRho(0, 0, 3), InputError);
  EXPECT_THROW(BrillNoetherRho(0, 3, 0), InputError);
}

TEST(ObstructionTest, QuadricThreeThreeIsInapplicable) {
  SurfaceModel q = SurfaceModel::SmoothQuadric();
  ObstructionReport r = Obstruction2Normal(q, DivisorClass{3, 3}, 1);
  EXPECT_EQ(r.outcome, ObstructionOutcome::kInapplicable);
  EXPECT_EQ(r.failed_hypotheses,
            std::vector<std::string>{"D-3H not big and nef"});
  EXPECT_EQ(r.genus, std::optional<Integer>(3));
  EXPECT_EQ(r.degree, 6);
  EXPECT_EQ(r.rho, std::optional<Integer>(3));
}

TEST(ObstructionTest, VerdictsWhenHypothesesHold) {
  SurfaceModel q = SurfaceModel::SmoothQuadric();
  // (4,4): D-3H = (1,1). Nodal count chosen so that rho > 0.
  ObstructionReport nodal = Obstruction2Normal(q, DivisorClass{4, 4}, 8);
  ASSERT_TRUE(nodal.rho);
  EXPECT_EQ(*nodal.genus, 1);
  EXPECT_EQ(*nodal.rho, BrillNoetherRho(1, 3, 8));
  EXPECT_EQ(nodal.outcome, *nodal.rho > 0
                               ? ObstructionOutcome::kNotGeometrically2Normal
                               : ObstructionOutcome::kNoObstruction);
  ObstructionReport smooth = Obstruction2Normal(q, DivisorClass{4, 4}, 0);
  EXPECT_EQ(*smooth.rho, BrillNoetherRho(9, 3, 8));
  EXPECT_EQ(smooth.outcome, ObstructionOutcome::kNoObstruction);
}

TEST(ObstructionTest, UserLatticeCitesPositivityAndAmbient) {
  SurfaceModel user = SurfaceModel::GeneralLattice(
      {{Integer(2)}}, DivisorClass{1}, DivisorClass{-2}, {true, true});
  ObstructionReport r = Obstruction2Normal(user, DivisorClass{5}, 0);
  EXPECT_EQ(r.outcome, ObstructionOutcome::kInapplicable);
  EXPECT_EQ(r.failed_hypotheses,
            (std::vector<std::string>{"positivity undecidable for user lattices",
                                      "ambient dimension unknown"}));
}

TEST(ZeroRegularityTest, Examples) {
  SurfaceModel s = Sextic();
  EXPECT_TRUE(ZeroRegularityEquivalence(s, s.Multiple(8), 2).applies);
  SurfaceModel q = SurfaceModel::SmoothQuadric();
  ApplicabilityReport r = ZeroRegularityEquivalence(q, DivisorClass{3, 3}, 2);
  EXPECT_FALSE(r.applies);
  EXPECT_EQ(r.failed_clauses, std::vector<std::string>{"D-3H not big and nef"});
  SurfaceModel p2 = SurfaceModel::ProjectivePlane();
  for (long k = 1; k <= 5; ++k) {
    EXPECT_FALSE(ZeroRegularityEquivalence(p2, p2.Multiple(k + 1), k).applies);
  }
}

TEST(SeveriRegularityTest, Examples) {
  SurfaceModel s = Sextic();
  ASSERT_EQ(CanonicalMultiple(s), std::optional<Integer>(2));
  EXPECT_EQ(SeveriRegularitySufficient(s, s.Multiple(8), 47).outcome,
            Outcome::kSufficient);
  EXPECT_EQ(SeveriRegularitySufficient(s, s.Multiple(8), 48).outcome,
            Outcome::kBoundFailed);
  SurfaceModel q = SurfaceModel::SmoothQuadric();
  GknVerdict v = SeveriRegularitySufficient(q, DivisorClass{3, 3}, 1);
  EXPECT_EQ(v.outcome, Outcome::kInapplicable);
  EXPECT_EQ(v.reason, "K_S is not a positive multiple of H");
  // A K3 (K = 0) is not a positive multiple either.
  SurfaceModel k3 = SurfaceModel::CompleteIntersection(3, {Integer(4)});
  EXPECT_FALSE(CanonicalMultiple(k3));
}

TEST(PlaneSeveriBoundTest, Examples) {
  EXPECT_EQ(ComputePlaneSeveriBound(7, 1).bound, 10);
  EXPECT_EQ(ComputePlaneSeveriBound(8, 2).bound, 10);
  for (long k = 1; k <= 3; ++k) {
    EXPECT_EQ(ComputePlaneSeveriBound(k + 3, k).bound, 1);
  }
  EXPECT_THROW(ComputePlaneSeveriBound(10, 4), InputError);
  EXPECT_THROW(ComputePlaneSeveriBound(10, 0), InputError);
  EXPECT_THROW(ComputePlaneSeveriBound(3, 1), InputError);
}

TEST(PlaneSeveriBoundTest, AgreesWithBinomialUpTo200) {
  for (long k = 1; k <= 3; ++k) {
    for (long n = k + 3; n <= 200; ++n) {
      PlaneSeveriBound b = ComputePlaneSeveriBound(n, k);
      long m = n - k - 3;
      EXPECT_EQ(b.bound, Integer((m + 1) * (m + 2) / 2)) << n << " " << k;
      EXPECT_EQ(b.bound, b.h0_check);
    }
  }
}

TEST(CastelnuovoTest, Values) {
  EXPECT_EQ(CastelnuovoMaxGenus(8, 3), 9);
  for (long k = 1; k <= 30; ++k) {
    EXPECT_EQ(CastelnuovoMaxGenus(2 * k, 3), Integer((k - 1) * (k - 1)));
  }
  for (long r = 2; r <= 30; ++r) EXPECT_EQ(CastelnuovoMaxGenus(r, r), 0);
  // Plane curves: the bound is the arithmetic genus.
  for (long d = 1; d <= 30; ++d) {
    EXPECT_EQ(CastelnuovoMaxGenus(d, 2), Integer((d - 1) * (d - 2) / 2));
  }
  EXPECT_THROW(CastelnuovoMaxGenus(0, 3), InputError);
  EXPECT_THROW(CastelnuovoMaxGenus(5, 1), InputError);
}

TEST(ProjectionExampleTest, TwelveNodes) {
  SurfaceModel p2 = SurfaceModel::ProjectivePlane();
  SurfaceModel q = SurfaceModel::SmoothQuadric();
  Integer plane = ArithmeticGenus(p2, p2.Multiple(8));
  Integer space = ArithmeticGenus(q, DivisorClass{4, 4});
  EXPECT_EQ(plane, 21);
  EXPECT_EQ(space, 9);
  EXPECT_EQ(plane - space, 12);
  EXPECT_EQ(plane - CastelnuovoMaxGenus(8, 3), 12);
}

}  // namespace
}  // namespace gkn
