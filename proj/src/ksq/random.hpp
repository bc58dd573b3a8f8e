// Copyright 2026 The ksqrng Authors
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
#include <limits>
#include <utility>

namespace ksq {

//---------------------------------------------------------------------------//
/*!
 * Philox4x32-10 block function (Salmon et al., SC'11).
 *
 * Maps a 128-bit counter and a 64-bit key to 128 pseudo-random bits. Pure, so
 * any block of any stream can be computed independently of every other.
 */
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key) noexcept;

//---------------------------------------------------------------------------//
/*!
 * Counter-based random stream keyed by (seed, stream id).
 *
 * The seed is the Philox key; the stream id occupies the upper 64 bits of the
 * counter and the block index the lower 64 bits. Two sources with the same
 * (seed, stream) produce identical sequences regardless of what any other
 * source has drawn, which is what makes per-trial parallelism deterministic.
 *
 * Satisfies std::uniform_random_bit_generator.
 */
class RandomSource {
  public:
    using result_type = std::uint64_t;

    explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_(stream) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept
    {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept { return next_u64(); }

    std::uint64_t next_u64() noexcept
    {
        if (cursor_ == 2) {
            refill();
        }
        return buffer_[cursor_++];
    }

    // Uniform on [0, 1) with 53 bits of resolution.
    double uniform() noexcept
    {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Two independent standard normals (Box-Muller).
    std::pair<double, double> normal_pair() noexcept;

    std::uint64_t blocks_drawn() const noexcept { return block_; }

  private:
    void refill() noexcept;

    PhiloxKey key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buffer_{};
    unsigned cursor_ = 2;
};

} // namespace ksq
