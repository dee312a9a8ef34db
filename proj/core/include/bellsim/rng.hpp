// Copyright 2026 The bellsim Authors
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

#pragma once

#include <array>
#include <cstdint>

namespace bellsim {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// A pure function of (counter, key): no state, so any block of any stream
/// can be produced independently of every other one.
class Philox4x32 {
  public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    [[nodiscard]] static Counter block(Counter ctr, Key key) noexcept;
};

/// Deterministic stream of unit-uniform doubles for one trial.
///
/// Layout: key = (seed low word, seed high word); block b of trial i uses
/// counter (b, 0, i low word, i high word). Each uniform consumes two
/// consecutive 32-bit words w0, w1 and is ((w1 << 32 | w0) >> 11) * 2^-53,
/// which lies in [0, 1). The mapping is fixed; changing it changes every
/// simulated result.
class TrialStream {
  public:
    TrialStream(std::uint64_t seed, std::uint64_t trial_index) noexcept;

    double next_uniform() noexcept;
    std::uint32_t next_word() noexcept;

  private:
    void refill() noexcept;

    Philox4x32::Key key_;
    std::uint64_t trial_index_;
    std::uint32_t block_index_ = 0;
    Philox4x32::Counter buffer_{};
    unsigned used_ = 4;
};

/// Converts a 64-bit word to a double in [0, 1) using its top 53 bits.
[[nodiscard]] constexpr double to_unit_interval(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

} // namespace bellsim
