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

#include "gkn/counter_rng.h"

namespace gkn {
namespace {

constexpr uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

}  // namespace

uint64_t CounterRng::Mix(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t CounterRng::Next() {
  ++counter_;
  return Mix(key_ + counter_ * kGoldenGamma);
}

CounterRng CounterRng::Split(uint64_t index) const {
  return CounterRng(Mix(Mix(key_) ^ Mix(index + kGoldenGamma)));
}

Integer CounterRng::UniformBelow(const Integer& bound) {
  if (bound <= 0) throw InputError("UniformBelow needs a positive bound");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t excess = words * 64 - bits;
  while (true) {
    Integer candidate = 0;
    for (std::size_t w = 0; w < words; ++w) {
      uint64_t word = Next();
      if (w == 0 && excess > 0) word >>= excess;
      candidate <<= 64;
      Integer chunk;
      mpz_import(chunk.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
      candidate += chunk;
    }
    if (candidate < bound) return candidate;
  }
}

Integer CounterRng::UniformInRange(const Integer& lo, const Integer& hi) {
  if (hi < lo) throw InputError("empty range");
  return lo + UniformBelow(hi - lo + 1);
}

}  // namespace gkn
