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

// Text formats for surfaces, divisors and point lists.
//
// Surface spec (JSON):
//   {"model":"projective_plane"}
//   {"model":"quadric"}
//   {"model":"complete_intersection","ambient_dim":3,"degrees":[6]}
//   {"model":"lattice","gram":[[...]],"H":[...],"K":[...],
//    "flags":{"h1_kH_vanishes":true,"k_normal":true},"ambient_dim":4}
// ("ambient_dim" is optional for lattices.)
//
// Builtin shorthands: "p2", "quadric", "ci:r=3,deg=6", "ci:r=4,deg=2x3".
//
// Divisor: "nH" (also "H", "-2H") or {"coords":[...]}.
//
// Point list (JSON):
//   {"degree": d, "points": [{"xyz": ["1","0","1"], "mult": 1}, ...]}
// with coordinates given as strings "p", "p/q" or decimals.
//
// Integers may be JSON numbers or decimal strings on input. On output they
// are numbers when they fit in 64 bits and decimal strings otherwise.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "gkn/lattice.h"
#include "gkn/plane_oracle.h"

namespace gkn {

using Json = nlohmann::json;

Json IntegerToJson(const Integer& value);
Integer IntegerFromJson(const Json& value, std::string_view what);

SurfaceModel SurfaceFromJson(const Json& spec);
Json SurfaceToJson(const SurfaceModel& surface);

// Accepts a builtin shorthand, inline JSON, or a path to a JSON file.
SurfaceModel ParseSurfaceArgument(const std::string& argument);
// Returns nullopt when `text` is not a shorthand.
std::optional<SurfaceModel> ParseBuiltinShorthand(std::string_view text);

DivisorClass ParseDivisor(std::string_view text, const SurfaceModel& surface);

PointConditionScheme SchemeFromJson(const Json& spec);
Json SchemeToJson(const PointConditionScheme& scheme);

std::string ReadFile(const std::string& path);

}  // namespace gkn
