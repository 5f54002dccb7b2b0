// Copyright 2026 The biomeval Authors
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

#include <array>
#include <cstdint>

namespace biomeval {

// Counter-based generator: Philox4x32 with 10 rounds (Salmon et al.,
// "Parallel random numbers: as easy as 1, 2, 3", SC'11). The output stream
// is a pure function of (seed, stream, draw index), so synthetic data is
// reproducible across runs and platforms without carrying generator state
// around. Never replace this with a platform default engine; frozen test
// values depend on the exact stream.
class Philox4x32 {
 public:
  explicit Philox4x32(std::uint64_t seed, std::uint64_t stream = 0);

  // Raw 10-round Philox block function, exposed for known-answer tests.
  static std::array<std::uint32_t, 4> block(
      const std::array<std::uint32_t, 4>& counter,
      const std::array<std::uint32_t, 2>& key);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform double in [0, 1), 53 random bits.
  double next_double();

  // Standard normal via the Box-Muller transform: each uniform pair
  // (u1, u2), u1 in (0, 1], yields sqrt(-2 ln u1) * (cos, sin)(2 pi u2);
  // the sine variate is buffered and returned on the next call.
  double next_gaussian();

 private:
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 4> buffer_{};
  int buffered_ = 0;  // unread u32 lanes left in buffer_
  double spare_gaussian_ = 0.0;
  bool has_spare_gaussian_ = false;

  void advance_counter();
};

}  // namespace biomeval
