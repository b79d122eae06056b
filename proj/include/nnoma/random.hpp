/*
 * Copyright 2026 nnoma-sim contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <array>
#include <cstdint>

namespace nnoma {

/// Philox4x32 with 10 rounds (Salmon et al., SC'11). Stateless bijection from
/// (counter, key) to 128 random bits.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter generate(Counter ctr, Key key);
};

/// SplitMix64 output function; used to derive stream ids.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/**
 * Counter-based random stream: (seed, stream id) select a Philox key and the
 * upper counter half; the lower half counts blocks. `split(tag)` derives an
 * independent child stream without consuming anything from the parent, so a
 * trial, cluster or link can own its stream regardless of evaluation order.
 *
 * All distributions are implemented here rather than through <random> so
 * that draws are bit-identical across standard libraries.
 */
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0)
      : seed_(seed), stream_(stream_id) {}

  RandomStream split(std::uint64_t tag) const {
    return RandomStream(seed_, mix64(stream_ ^ mix64(tag)));
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_; }

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1].
  double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  /// Unit-mean exponential, strictly positive.
  double exponential();

  /// Poisson(mean). Inversion below mean 10, PTRS transformed rejection above.
  std::uint64_t poisson(double mean);

  /// Uniform integer in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
};

}  // namespace nnoma
