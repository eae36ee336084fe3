// Copyright 2026 The IRNI Authors
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

#ifndef IRNI_RNG_H_
#define IRNI_RNG_H_

#include <cstdint>

namespace irni {

// SplitMix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t HashCombine(std::uint64_t seed, std::uint64_t value) {
  return Mix64(seed ^ Mix64(value));
}

// Counter-based generator: each draw is a pure function of
// (seed, stream, counter), so walks and samples can be generated in any
// order, or in parallel, and still reproduce exactly.
class CounterRng {
 public:
  __extension__ using Uint128 = unsigned __int128;

  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(HashCombine(Mix64(seed), stream)) {}

  std::uint64_t Bits(std::uint64_t counter, std::uint64_t attempt = 0) const {
    return HashCombine(HashCombine(key_, counter), attempt);
  }

  // Uniform in [0, bound), unbiased (Lemire's multiply-and-reject).
  std::uint64_t UniformInt(std::uint64_t bound, std::uint64_t counter) const {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (std::uint64_t attempt = 0;; ++attempt) {
      const Uint128 m = static_cast<Uint128>(Bits(counter, attempt)) * bound;
      if (static_cast<std::uint64_t>(m) >= threshold) {
        return static_cast<std::uint64_t>(m >> 64);
      }
    }
  }

  // Uniform in [0, 1) with 53 random bits.
  double UniformUnit(std::uint64_t counter, std::uint64_t attempt = 0) const {
    return static_cast<double>(Bits(counter, attempt) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
};

}  // namespace irni

#endif  // IRNI_RNG_H_
