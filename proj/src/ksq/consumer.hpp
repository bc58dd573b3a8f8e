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

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ksq/bitstream.hpp"

namespace ksq {

// Sequential reader over a BitStream. Chunks are read most significant bit
// first.
class BitCursor {
  public:
    explicit BitCursor(const BitStream& bits) noexcept : bits_(&bits) {}

    std::uint64_t remaining() const noexcept { return bits_->size() - pos_; }
    std::uint64_t position() const noexcept { return pos_; }

    // Returns false, consuming nothing, if fewer than width bits remain.
    bool take(unsigned width, std::uint64_t& value) noexcept;

  private:
    const BitStream* bits_;
    std::uint64_t pos_ = 0;
};

enum class SSResult { kComposite, kProbablyPrime };

struct SSVerdict {
    std::uint64_t number = 0;
    SSResult verdict = SSResult::kProbablyPrime;
    std::uint64_t witnesses_used = 0;
    std::uint64_t bits_consumed = 0;
};

// The bit source ran dry before a verdict; carries the partial counts.
class BitSourceExhausted : public std::runtime_error {
  public:
    BitSourceExhausted(const std::string& what, SSVerdict partial, std::size_t index = 0)
        : std::runtime_error(what), partial_(partial), index_(index) {}
    const SSVerdict& partial() const noexcept { return partial_; }
    // Position in the harness list of the number being tested.
    std::size_t index() const noexcept { return index_; }

  private:
    SSVerdict partial_;
    std::size_t index_;
};

// Jacobi symbol (a/n) for odd n >= 1. Throws ValidationError otherwise.
int jacobi(std::int64_t a, std::int64_t n);
int jacobi_unsigned(std::uint64_t a, std::uint64_t n) noexcept;

// base^exp mod m with 128-bit intermediates; m >= 1.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

//---------------------------------------------------------------------------//
/*!
 * Solovay-Strassen compositeness test.
 *
 * Witnesses a = 2 + v are drawn by rejection: v is a chunk of w bits, with w
 * the bit length of n - 3, and is accepted when v < n - 3, which makes a
 * uniform on [2, n - 2]. Every drawn bit counts toward bits_consumed,
 * rejected chunks included. Even n > 2 is composite without drawing; n = 3
 * has no witnesses and is reported probably prime.
 */
SSVerdict solovay_strassen(std::uint64_t n, BitCursor& bits, unsigned max_witnesses);

// Carmichael numbers below limit by Korselt's criterion.
std::vector<std::uint64_t> carmichael_numbers(std::uint64_t limit);

struct HarnessResult {
    std::vector<SSVerdict> verdicts;
    std::uint64_t total_bits = 0;
    std::uint64_t total_witnesses = 0;
    std::uint64_t composites = 0;
};

// Tests every Carmichael number below limit, ascending, from one shared
// cursor. Exhaustion propagates with index() set.
HarnessResult carmichael_harness(std::uint64_t limit, BitCursor& bits, unsigned max_witnesses);

} // namespace ksq
