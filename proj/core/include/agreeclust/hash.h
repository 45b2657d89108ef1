// Copyright 2026 The agreeclust Authors.
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

// Seeded, platform-stable hashing. Everything random in this library is a
// pure function of a 64-bit seed and some integer coordinates, so results
// replay bit-for-bit across runs, drivers and machine counts.

#ifndef AGREECLUST_HASH_H_
#define AGREECLUST_HASH_H_

#include <cstdint>

namespace agreeclust {

// SplitMix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t HashCombine(std::uint64_t seed, std::uint64_t value) {
  return Mix64(seed ^ Mix64(value));
}

constexpr std::uint64_t Hash3(std::uint64_t seed, std::uint64_t a,
                              std::uint64_t b) {
  return HashCombine(HashCombine(seed, a), b);
}

// Top 53 bits mapped to [0, 1).
constexpr double ToUnitInterval(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Multiply-shift reduction of a 64-bit value into [0, bound): the high word
// of the 128-bit product h * bound.
constexpr std::uint64_t ReduceToRange(std::uint64_t h, std::uint64_t bound) {
  constexpr std::uint64_t kLow = 0xffffffffULL;
  const std::uint64_t lo_lo = (h & kLow) * (bound & kLow);
  const std::uint64_t hi_lo = (h >> 32) * (bound & kLow);
  const std::uint64_t lo_hi = (h & kLow) * (bound >> 32);
  const std::uint64_t hi_hi = (h >> 32) * (bound >> 32);
  const std::uint64_t cross = (lo_lo >> 32) + (hi_lo & kLow) + lo_hi;
  return hi_hi + (hi_lo >> 32) + (cross >> 32);
}

// Counter-based generator: the i-th draw is Hash3(seed, stream, i).
class HashStream {
 public:
  HashStream(std::uint64_t seed, std::uint64_t stream)
      : seed_(seed), stream_(stream) {}

  std::uint64_t Next() { return Hash3(seed_, stream_, counter_++); }
  double NextUnit() { return ToUnitInterval(Next()); }
  std::uint64_t NextBelow(std::uint64_t bound) {
    return ReduceToRange(Next(), bound);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace agreeclust

#endif  // AGREECLUST_HASH_H_
