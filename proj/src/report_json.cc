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

#include "gkn/report_json.h"

namespace gkn {
namespace {

template <typename T>
Json Optional(const std::optional<T>& value) {
  if (!value) return nullptr;
  return IntegerToJson(*value);
}

Json Size(std::size_t n) { return Json(static_cast<uint64_t>(n)); }

}  // namespace

Json ToJson(const Rational& value) { return ToString(value); }

Json ToJson(const QuadraticSurd& value) {
  Json out = {{"expression", value.ToString()},
              {"approx", value.Approx()}};
  if (auto q = value.AsRational()) {
    out["exact"] = ToString(*q);
  } else {
    out["exact"] = nullptr;
  }
  return out;
}

Json ToJson(const InequalityCheck& check) {
  return {{"tag", HypothesisTag(check.hypothesis)},
          {"lhs", IntegerToJson(check.lhs)},
          {"rhs", IntegerToJson(check.rhs)},
          {"holds", check.holds}};
}

Json ToJson(const BoundReport& report) {
  return {{"t", IntegerToJson(report.t)},
          {"s", IntegerToJson(report.s)},
          {"f", ToJson(report.bound)},
          {"max_admissible_delta", Optional(report.max_admissible_delta)}};
}

Json ToJson(const GknVerdict& verdict) {
  Json trace = Json::array();
  for (const auto& check : verdict.trace) trace.push_back(ToJson(check));
  Json failed = Json::array();
  for (Hypothesis h : verdict.failed) failed.push_back(HypothesisTag(h));
  Json out = {{"outcome", OutcomeName(verdict.outcome)},
              {"delta", IntegerToJson(verdict.delta)},
              {"failed", failed},
              {"trace", trace}};
  out["k"] = verdict.outcome == Outcome::kInapplicable && verdict.trace.empty()
                 ? Json(nullptr)
                 : IntegerToJson(verdict.k);
  out["bound"] = verdict.bound ? ToJson(*verdict.bound) : Json(nullptr);
  out["reason"] = verdict.reason.empty() ? Json(nullptr) : Json(verdict.reason);
  out["vanishing_is_necessary"] = verdict.vanishing_is_necessary
                                      ? Json(*verdict.vanishing_is_necessary)
                                      : Json(nullptr);
  return out;
}

Json ToJson(const CiBoundReport& report) {
  return {{"n_at_least_2k_plus_1", report.n_at_least_2k_plus_1},
          {"degree_large_enough", report.degree_large_enough},
          {"admissible", report.admissible},
          {"bound", ToJson(report.bound)},
          {"max_delta", Optional(report.max_delta)}};
}

Json ToJson(const InstabilityQuadratic& q) {
  return {{"coefficients",
           {IntegerToJson(q.a), IntegerToJson(q.b), IntegerToJson(q.c)}},
          {"alpha", ToJson(q.alpha)},
          {"beta", ToJson(q.beta)},
          {"integer_witness", Optional(q.integer_witness)}};
}

Json ToJson(const ObstructionReport& report) {
  return {{"outcome", ObstructionOutcomeName(report.outcome)},
          {"genus", Optional(report.genus)},
          {"ambient_dim", Optional(report.ambient)},
          {"degree", IntegerToJson(report.degree)},
          {"rho", Optional(report.rho)},
          {"failed_hypotheses", report.failed_hypotheses}};
}

Json ToJson(const ApplicabilityReport& report) {
  return {{"applies", report.applies},
          {"failed_clauses", report.failed_clauses}};
}

Json ToJson(const PlaneSeveriBound& bound) {
  return {{"bound", IntegerToJson(bound.bound)},
          {"h0_check", IntegerToJson(bound.h0_check)}};
}

Json ToJson(const RankReport& report) {
  return {{"rows", Size(report.rows)},
          {"cols", Size(report.cols)},
          {"rank", Size(report.rank)},
          {"expected_conditions", IntegerToJson(report.expected_conditions)},
          {"h0", IntegerToJson(report.h0)},
          {"independent", report.independent},
          {"residual_dimension", IntegerToJson(report.residual_dimension)}};
}

Json ToJson(const SeveriVerification& s) {
  return {{"n", IntegerToJson(s.n)},
          {"k", IntegerToJson(s.k)},
          {"degree", s.degree},
          {"delta", s.delta},
          {"trials", s.trials},
          {"seed", s.seed},
          {"rng", s.rng_algorithm},
          {"coordinate_bound", IntegerToJson(s.coordinate_bound)},
          {"independent_trials", s.independent_trials},
          {"capped_trials", s.capped_trials},
          {"max_rank_over_capacity", Size(s.max_rank_over_capacity)}};
}

}  // namespace gkn
