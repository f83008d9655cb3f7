// Copyright 2026 The Gravphase Authors
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

namespace gravphase {

/// SplitMix64 output function (Steele, Lea & Flood).
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based random stream addressed by (master seed, stream index).
///
/// Every draw is a pure function of (seed, stream, draw counter), so shot k
/// sees the same numbers no matter which thread evaluates it or in what
/// order shots are processed.
class ShotStream {
public:
  constexpr ShotStream(std::uint64_t seed, std::uint64_t stream)
      : key_(splitmix64_mix(splitmix64_mix(seed) ^
                            (stream * 0xd1b54a32d192ed03ULL + 1))) {}

  constexpr std::uint64_t next_u64() {
    ++counter_;
    return splitmix64_mix(key_ + counter_ * kGamma);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform() {
    return double(next_u64() >> 11) * 0x1.0p-53;
  }

private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

} // namespace gravphase
