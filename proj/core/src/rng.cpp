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

#include "bellsim/rng.hpp"

namespace bellsim {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53;
constexpr std::uint32_t kMul1 = 0xCD9E8D57;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t &hi,
                    std::uint32_t &lo) noexcept {
    std::uint64_t const product = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(product >> 32);
    lo = static_cast<std::uint32_t>(product);
}

inline Philox4x32::Counter round(Philox4x32::Counter const &c,
                                 Philox4x32::Key const &k) noexcept {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, c[0], hi0, lo0);
    mulhilo(kMul1, c[2], hi1, lo1);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

} // namespace

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key) noexcept {
    for (int r = 0; r < 10; ++r) {
        if (r > 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        ctr = round(ctr, key);
    }
    return ctr;
}

TrialStream::TrialStream(std::uint64_t seed, std::uint64_t trial_index) noexcept
    : key_{static_cast<std::uint32_t>(seed),
           static_cast<std::uint32_t>(seed >> 32)},
      trial_index_(trial_index) {}

void TrialStream::refill() noexcept {
    buffer_ = Philox4x32::block(
        {block_index_, 0u, static_cast<std::uint32_t>(trial_index_),
         static_cast<std::uint32_t>(trial_index_ >> 32)},
        key_);
    ++block_index_;
    used_ = 0;
}

std::uint32_t TrialStream::next_word() noexcept {
    if (used_ == 4)
        refill();
    return buffer_[used_++];
}

double TrialStream::next_uniform() noexcept {
    std::uint64_t const lo = next_word();
    std::uint64_t const hi = next_word();
    return to_unit_interval((hi << 32) | lo);
}

} // namespace bellsim
