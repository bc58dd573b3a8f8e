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
#include <utility>

#include "ksq/bitstream.hpp"
#include "ksq/protocol.hpp"

namespace ksq {

// Zero -> 0, One -> 1, Discard dropped.
BitStream binary_bits(const RawStream& stream);

// Disjoint consecutive pairs: 01 -> 0, 10 -> 1, 00 and 11 rejected; a
// trailing unpaired bit is dropped.
BitStream von_neumann_extract(const BitStream& input);

// Output bits per input bit at zero-probability p0: p0 (1 - p0).
double expected_yield(double p0);

struct ExtractionReport {
    std::uint64_t input_bits = 0;
    std::uint64_t pairs = 0;
    std::uint64_t output_bits = 0;
    std::uint64_t trailing_dropped = 0;
    double realized_yield = 0.0;   // output_bits / input_bits
    double input_p0 = 0.0;
    double expected_yield = 0.0;   // at input_p0
};

// Incremental extractor; pushing a stream in any chunking gives the same
// output as von_neumann_extract on the concatenation.
class VonNeumannExtractor {
  public:
    void push(bool bit)
    {
        ++input_bits_;
        zeros_ += !bit;
        if (!has_pending_) {
            pending_ = bit;
            has_pending_ = true;
            return;
        }
        has_pending_ = false;
        ++pairs_;
        if (pending_ != bit) {
            out_.push_back(pending_);
        }
    }

    void push(const BitStream& bits);

    const BitStream& output() const noexcept { return out_; }
    BitStream take_output() { return std::move(out_); }
    ExtractionReport report() const;

  private:
    BitStream out_;
    std::uint64_t input_bits_ = 0;
    std::uint64_t zeros_ = 0;
    std::uint64_t pairs_ = 0;
    bool pending_ = false;
    bool has_pending_ = false;
};

} // namespace ksq
