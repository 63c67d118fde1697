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

#include <cstdint>
#include <string_view>

#include "gkn/common.h"

namespace gkn {

// Counter-based generator: the i-th output is SplitMix64's finalizer applied
// to key + (i+1) * golden_gamma. Streams are split by hashing (key, index),
// so per-trial streams do not depend on scheduling.
class CounterRng {
 public:
  static constexpr std::string_view kAlgorithm = "splitmix64-ctr/v1";

  explicit CounterRng(uint64_t key) : key_(key) {}

  uint64_t Next();

  // Independent stream for sub-task `index`.
  CounterRng Split(uint64_t index) const;

  // Uniform on [0, bound) for bound > 0, by rejection.
  Integer UniformBelow(const Integer& bound);

  // Uniform on [lo, hi].
  Integer UniformInRange(const Integer& lo, const Integer& hi);

  static uint64_t Mix(uint64_t z);

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace gkn
