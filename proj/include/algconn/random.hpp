// Copyright 2026 The algconn Authors.
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

#ifndef ALGCONN_RANDOM_HPP_
#define ALGCONN_RANDOM_HPP_

#include <cstdint>

namespace algconn {

// SplitMix64 (Steele, Lea and Flood, 2014). 64 bits of state, one add and a
// three-stage mixer per output. The sampling helpers below are written out
// here instead of going through <random> distributions so that a given seed
// produces the same stream with every standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double NextDouble() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound). bound must be positive. Rejection sampling, so
  // there is no modulo bias.
  uint64_t NextBelow(uint64_t bound) {
    const uint64_t limit = bound * (UINT64_MAX / bound);
    uint64_t x = Next();
    while (x >= limit) x = Next();
    return x % bound;
  }

  // Uniform in [lo, hi].
  int NextInt(int lo, int hi) {
    return lo + static_cast<int>(NextBelow(static_cast<uint64_t>(hi - lo) + 1));
  }

  uint64_t state() const { return state_; }

 private:
  uint64_t state_;
};

}  // namespace algconn

#endif  // ALGCONN_RANDOM_HPP_
