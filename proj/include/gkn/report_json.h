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

#include "gkn/criteria.h"
#include "gkn/plane_oracle.h"
#include "gkn/surface_io.h"

namespace gkn {

// Bumped whenever a field is renamed or removed.
inline constexpr int kReportSchemaVersion = 1;

Json ToJson(const QuadraticSurd& value);
Json ToJson(const Rational& value);
Json ToJson(const InequalityCheck& check);
Json ToJson(const BoundReport& report);
Json ToJson(const GknVerdict& verdict);
Json ToJson(const CiBoundReport& report);
Json ToJson(const InstabilityQuadratic& quadratic);
Json ToJson(const ObstructionReport& report);
Json ToJson(const ApplicabilityReport& report);
Json ToJson(const PlaneSeveriBound& bound);
Json ToJson(const RankReport& report);
Json ToJson(const SeveriVerification& summary);

}  // namespace gkn
