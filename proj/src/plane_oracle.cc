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

#include "gkn/plane_oracle.h"

#include <algorithm>
#include <exception>
#include <set>
#include <thread>

#include "gkn/criteria.h"

namespace gkn {
namespace {

// n (n-1) ... (n-i+1)
Integer FallingFactorial(int n, int i) {
  Integer out = 1;
  for (int j = 0; j < i; ++j) out *= n - j;
  return out;
}

std::vector<Rational> Powers(const Rational& base, int max_exponent) {
  std::vector<Rational> out(max_exponent + 1);
  out[0] = 1;
  for (int e = 1; e <= max_exponent; ++e) out[e] = out[e - 1] * base;
  return out;
}

void RequireDegree(int degree) {
  if (degree < 0) {
    throw InputError("degree must be >= 0, got " + std::to_string(degree));
  }
}

void RequireMultiplicity(int multiplicity) {
  if (multiplicity < 1) {
    throw InputError("multiplicity must be >= 1, got " +
                     std::to_string(multiplicity));
  }
}

}  // namespace

PlanePoint::PlanePoint(Rational x, Rational y, Rational z)
    : coords_{std::move(x), std::move(y), std::move(z)}, chart_(-1) {
  for (Rational& c : coords_) {
    if (c.get_den() == 0) throw InputError("coordinate with zero denominator");
    c.canonicalize();
  }
  for (int i = 2; i >= 0; --i) {
    if (coords_[i] != 0) {
      chart_ = i;
      break;
    }
  }
  if (chart_ < 0) throw InputError("point (0:0:0) is not a point of P^2");
  Rational scale = coords_[chart_];
  for (Rational& c : coords_) c /= scale;
}

std::array<Rational, 3> PlanePoint::InChart(int chart) const {
  if (chart < 0 || chart > 2 || coords_[chart] == 0) {
    throw InputError("point " + ToString() + " is not in chart " +
                     std::to_string(chart));
  }
  std::array<Rational, 3> out = coords_;
  Rational scale = coords_[chart];
  for (Rational& c : out) c /= scale;
  return out;
}

std::string PlanePoint::ToString() const {
  return "(" + gkn::ToString(coords_[0]) + ":" + gkn::ToString(coords_[1]) +
         ":" + gkn::ToString(coords_[2]) + ")";
}

Integer PointConditionScheme::ConditionCount() const {
  Integer total = 0;
  for (const PointCondition& p : points) {
    total += Integer(p.multiplicity) * (p.multiplicity + 1) / 2;
  }
  return total;
}

Integer PlaneSectionCount(const Integer& degree) {
  if (degree < 0) return 0;
  return (degree + 1) * (degree + 2) / 2;
}

std::vector<std::array<int, 3>> Monomials(int degree) {
  RequireDegree(degree);
  std::vector<std::array<int, 3>> out;
  out.reserve(static_cast<std::size_t>(degree + 1) * (degree + 2) / 2);
  for (int a = degree; a >= 0; --a) {
    for (int b = degree - a; b >= 0; --b) {
      out.push_back({a, b, degree - a - b});
    }
  }
  return out;
}

RationalMatrix JetRows(const PlanePoint& point, int multiplicity, int degree,
                       int chart) {
  RequireDegree(degree);
  RequireMultiplicity(multiplicity);
  const std::array<Rational, 3> p = point.InChart(chart);
  // Affine coordinates: the two homogeneous coordinates other than `chart`.
  int u_index = chart == 0 ? 1 : 0;
  int v_index = chart == 2 ? 1 : 2;
  const std::vector<Rational> u_pow = Powers(p[u_index], degree);
  const std::vector<Rational> v_pow = Powers(p[v_index], degree);
  const auto monomials = Monomials(degree);

  RationalMatrix rows;
  for (int order = 0; order < multiplicity; ++order) {
    for (int i = order; i >= 0; --i) {
      const int j = order - i;
      std::vector<Rational> row(monomials.size());
      for (std::size_t col = 0; col < monomials.size(); ++col) {
        const int alpha = monomials[col][u_index];
        const int beta = monomials[col][v_index];
        if (i > alpha || j > beta) continue;  // stays 0
        row[col] = Rational(FallingFactorial(alpha, i) *
                            FallingFactorial(beta, j)) *
                   u_pow[alpha - i] * v_pow[beta - j];
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

RationalMatrix EvaluationMatrix(const PointConditionScheme& scheme) {
  RequireDegree(scheme.degree);
  std::string duplicates;
  for (std::size_t i = 0; i < scheme.points.size(); ++i) {
    for (std::size_t j = i + 1; j < scheme.points.size(); ++j) {
      if (scheme.points[i].point == scheme.points[j].point) {
        if (!duplicates.empty()) duplicates += ", ";
        duplicates += scheme.points[i].point.ToString() + " at " +
                      std::to_string(i) + " and " + std::to_string(j);
      }
    }
  }
  if (!duplicates.empty()) {
    throw InputError("duplicate points: " + duplicates);
  }
  RationalMatrix matrix;
  for (const PointCondition& p : scheme.points) {
    RationalMatrix rows = JetRows(p.point, p.multiplicity, scheme.degree,
                                  p.point.canonical_chart());
    for (auto& row : rows) matrix.push_back(std::move(row));
  }
  return matrix;
}

std::size_t BareissRank(IntegerMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  Integer previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Integer& p = m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer value = p * m[i][j] - m[i][c] * m[rank][j];
        // Every entry is a minor of the input, so the division is exact.
        mpz_divexact(m[i][j].get_mpz_t(), value.get_mpz_t(),
                     previous.get_mpz_t());
      }
      m[i][c] = 0;
    }
    previous = m[rank][c];
    ++rank;
  }
  return rank;
}

std::size_t ExactRank(const RationalMatrix& matrix) {
  IntegerMatrix scaled;
  scaled.reserve(matrix.size());
  for (const auto& row : matrix) {
    Integer lcm = 1;
    for (const Rational& q : row) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<Integer> out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      out[j] = row[j].get_num() * (lcm / row[j].get_den());
    }
    scaled.push_back(std::move(out));
  }
  return BareissRank(std::move(scaled));
}

RankReport IndependentConditions(const PointConditionScheme& scheme) {
  RationalMatrix matrix = EvaluationMatrix(scheme);
  RankReport report;
  report.rows = matrix.size();
  report.cols = Monomials(scheme.degree).size();
  report.rank = ExactRank(matrix);
  report.expected_conditions = scheme.ConditionCount();
  report.h0 = PlaneSectionCount(scheme.degree);
  const Integer target = std::min(report.expected_conditions, report.h0);
  report.independent = Integer(static_cast<unsigned long>(report.rank)) == target;
  report.residual_dimension =
      report.h0 - Integer(static_cast<unsigned long>(report.rank));
  return report;
}

PointConditionScheme RandomConfiguration(int count, int multiplicity,
                                         int degree,
                                         const Integer& coordinate_bound,
                                         CounterRng& rng) {
  if (count < 1) throw InputError("point count must be >= 1");
  if (coordinate_bound < 1) throw InputError("coordinate bound must be >= 1");
  RequireMultiplicity(multiplicity);
  RequireDegree(degree);
  Integer side = 2 * coordinate_bound + 1;
  if (Integer(count) > side * side) {
    throw InputError("cannot place " + std::to_string(count) +
                     " distinct points with coordinate bound " +
                     coordinate_bound.get_str());
  }
  PointConditionScheme scheme;
  scheme.degree = degree;
  std::set<std::pair<Integer, Integer>> used;
  while (static_cast<int>(scheme.points.size()) < count) {
    Integer x = rng.UniformInRange(-coordinate_bound, coordinate_bound);
    Integer y = rng.UniformInRange(-coordinate_bound, coordinate_bound);
    if (!used.emplace(x, y).second) continue;
    scheme.points.push_back(
        {PlanePoint(Rational(x), Rational(y), Rational(1)), multiplicity});
  }
  return scheme;
}

PointConditionScheme RandomConfiguration(int count, int multiplicity,
                                         int degree,
                                         const Integer& coordinate_bound,
                                         uint64_t seed) {
  CounterRng rng(seed);
  return RandomConfiguration(count, multiplicity, degree, coordinate_bound,
                             rng);
}

std::vector<RankReport> RandomRankTrials(int count, int multiplicity,
                                         int degree,
                                         const Integer& coordinate_bound,
                                         int trials, uint64_t seed) {
  if (trials < 0) throw InputError("trials must be >= 0");
  std::vector<RankReport> results(trials);
  std::vector<std::exception_ptr> errors(trials);
  const CounterRng root(seed);
  auto run = [&](int trial) {
    try {
      CounterRng rng = root.Split(static_cast<uint64_t>(trial));
      results[trial] = IndependentConditions(RandomConfiguration(
          count, multiplicity, degree, coordinate_bound, rng));
    } catch (...) {
      errors[trial] = std::current_exception();
    }
  };
  const int workers = std::clamp<int>(
      static_cast<int>(std::thread::hardware_concurrency()), 1,
      std::max(trials, 1));
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int trial = w; trial < trials; trial += workers) run(trial);
      });
    }
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return results;
}

SeveriVerification VerifyPlaneSeveri(const Integer& n, const Integer& k,
                                     int trials, uint64_t seed,
                                     const Integer& coordinate_bound) {
  PlaneSeveriBound bound = ComputePlaneSeveriBound(n, k);
  SeveriVerification out;
  out.n = n;
  out.k = k;
  out.degree = static_cast<int>(ToInt64(n - 3 - k, "curve degree n-3-k"));
  out.delta = static_cast<int>(ToInt64(bound.bound, "delta"));
  out.trials = trials;
  out.seed = seed;
  out.rng_algorithm = std::string(CounterRng::kAlgorithm);
  out.coordinate_bound = coordinate_bound;

  // Separate stream families for the delta and delta + 1 experiments.
  const CounterRng root(seed);
  const uint64_t at_bound_seed = root.Split(0).Next();
  const uint64_t over_seed = root.Split(1).Next();
  const auto at_bound = RandomRankTrials(out.delta, 1, out.degree,
                                         coordinate_bound, trials,
                                         at_bound_seed);
  const auto over = RandomRankTrials(out.delta + 1, 1, out.degree,
                                     coordinate_bound, trials, over_seed);
  const Integer h0 = PlaneSectionCount(out.degree);
  for (const RankReport& r : at_bound) {
    if (r.independent) ++out.independent_trials;
  }
  for (const RankReport& r : over) {
    if (Integer(static_cast<unsigned long>(r.rank)) == h0) ++out.capped_trials;
    out.max_rank_over_capacity = std::max(out.max_rank_over_capacity, r.rank);
  }
  if (Integer(static_cast<unsigned long>(out.max_rank_over_capacity)) > h0) {
    throw InvariantViolation("rank exceeds h^0(O(d))");
  }
  return out;
}

}  // namespace gkn
