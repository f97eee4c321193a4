// Copyright 2026 The covertime Authors
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

#ifndef COVERTIME_RANDOM_H_
#define COVERTIME_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace covertime {

// SplitMix64 finalizer.
inline uint64_t MixBits(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// A generator for the named substream (name, a, b) of `seed`. Distinct
// names or indices give statistically independent streams, so results do
// not depend on the order in which streams are consumed.
inline std::mt19937_64 SubstreamRng(uint64_t seed, std::string_view name, uint64_t a = 0,
                                    uint64_t b = 0) {
  uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  uint64_t state = MixBits(seed ^ MixBits(h));
  state = MixBits(state ^ MixBits(a + 1));
  state = MixBits(state ^ MixBits((b + 1) * 0x632be59bd9b4e019ULL));
  std::seed_seq seq{static_cast<uint32_t>(state), static_cast<uint32_t>(state >> 32)};
  return std::mt19937_64(seq);
}

// Uniform integer in [lo, hi].
inline int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double UniformUnit(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace covertime

#endif  // COVERTIME_RANDOM_H_
