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

#include "ksq/extract.hpp"

#include "ksq/error.hpp"

namespace ksq {

BitStream binary_bits(const RawStream& stream)
{
    BitStream bits;
    bits.reserve(stream.counts().zero + stream.counts().one);
    for (Symbol s : stream.symbols()) {
        if (s != Symbol::Discard) {
            bits.push_back(s == Symbol::One);
        }
    }
    return bits;
}

void VonNeumannExtractor::push(const BitStream& bits)
{
    for (std::uint64_t i = 0; i < bits.size(); ++i) {
        push(bits[i]);
    }
}

ExtractionReport VonNeumannExtractor::report() const
{
    ExtractionReport r;
    r.input_bits = input_bits_;
    r.pairs = pairs_;
    r.output_bits = out_.size();
    r.trailing_dropped = has_pending_ ? 1 : 0;
    if (input_bits_ > 0) {
        r.realized_yield = static_cast<double>(r.output_bits) / static_cast<double>(input_bits_);
        r.input_p0 = static_cast<double>(zeros_) / static_cast<double>(input_bits_);
        r.expected_yield = expected_yield(r.input_p0);
    }
    return r;
}

BitStream von_neumann_extract(const BitStream& input)
{
    VonNeumannExtractor ex;
    ex.push(input);
    return ex.take_output();
}

double expected_yield(double p0)
{
    if (!(p0 >= 0.0 && p0 <= 1.0)) {
        throw ValidationError("p0 must lie in [0, 1]");
    }
    return p0 * (1.0 - p0);
}

} // namespace ksq
