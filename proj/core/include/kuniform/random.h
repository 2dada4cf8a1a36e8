// Copyright 2026 The kuniform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef KUNIFORM_RANDOM_H_
#define KUNIFORM_RANDOM_H_

#include <cstdint>
#include <limits>

namespace kuniform {

// SplitMix64 (Steele, Lea, Flood 2014). Small, fast, and good enough for
// drawing actions; satisfies UniformRandomBitGenerator so it plugs into the
// <random> distributions.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double NextDouble() { return ((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Seed of stream `stream` derived from a user seed. Used to give every
// sample / trial block its own generator so results do not depend on how
// work is split across threads.
inline std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 a(seed);
  SplitMix64 b(a() ^ (stream * 0xd1b54a32d192ed03ULL));
  return b();
}

}  // namespace kuniform

#endif  // KUNIFORM_RANDOM_H_
