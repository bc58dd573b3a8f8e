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

#include "ksq/bitstream.hpp"

#include <bit>
#include <utility>

#include "ksq/error.hpp"

namespace ksq {

BitStream BitStream::from_bits(const std::vector<std::uint8_t>& bits)
{
    BitStream s;
    s.reserve(bits.size());
    for (auto b : bits) {
        if (b > 1) {
            throw ValidationError("bit value must be 0 or 1");
        }
        s.push_back(b != 0);
    }
    return s;
}

BitStream::BitStream(std::initializer_list<int> bits)
{
    reserve(bits.size());
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw ValidationError("bit value must be 0 or 1");
        }
        push_back(b == 1);
    }
}

BitStream BitStream::from_words(std::vector<std::uint64_t> words, std::uint64_t size)
{
    if (words.size() != (size + 63) / 64) {
        throw ValidationError("word count does not match bit count");
    }
    if (size % 64 != 0 && (words.back() >> (size % 64)) != 0) {
        throw ValidationError("bits beyond the stream length must be zero");
    }
    BitStream s;
    s.words_ = std::move(words);
    s.size_ = size;
    return s;
}

std::uint64_t BitStream::count_ones() const noexcept
{
    std::uint64_t n = 0;
    for (auto w : words_) {
        n += static_cast<std::uint64_t>(std::popcount(w));
    }
    return n;
}

std::uint64_t BitStream::count_ones(std::uint64_t begin, std::uint64_t end) const noexcept
{
    if (begin >= end) {
        return 0;
    }
    const std::uint64_t first = begin >> 6;
    const std::uint64_t last = (end - 1) >> 6;
    const std::uint64_t lo_mask = ~std::uint64_t{0} << (begin & 63);
    const std::uint64_t hi_mask = ~std::uint64_t{0} >> (63 - ((end - 1) & 63));
    if (first == last) {
        return static_cast<std::uint64_t>(std::popcount(words_[first] & lo_mask & hi_mask));
    }
    std::uint64_t n = static_cast<std::uint64_t>(std::popcount(words_[first] & lo_mask));
    for (std::uint64_t w = first + 1; w < last; ++w) {
        n += static_cast<std::uint64_t>(std::popcount(words_[w]));
    }
    return n + static_cast<std::uint64_t>(std::popcount(words_[last] & hi_mask));
}

} // namespace ksq
