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
#include <initializer_list>
#include <vector>

namespace ksq {

// Packed bit sequence. Bit i lives in word i / 64 at position i % 64, so the
// little-endian byte image of the words is the LSB-first byte encoding.
class BitStream {
  public:
    BitStream() = default;
    BitStream(std::initializer_list<int> bits);
    static BitStream from_bits(const std::vector<std::uint8_t>& bits);
    // Adopts packed words; bits at positions >= size must be zero.
    static BitStream from_words(std::vector<std::uint64_t> words, std::uint64_t size);

    std::uint64_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool operator[](std::uint64_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void push_back(bool bit)
    {
        if ((size_ & 63) == 0) {
            words_.push_back(0);
        }
        words_.back() |= static_cast<std::uint64_t>(bit) << (size_ & 63);
        ++size_;
    }

    void reserve(std::uint64_t n_bits) { words_.reserve((n_bits + 63) / 64); }

    // Byte k holds bits 8k..8k+7, LSB first. k < ceil(size / 8).
    std::uint8_t byte(std::uint64_t k) const noexcept
    {
        return static_cast<std::uint8_t>(words_[k >> 3] >> (8 * (k & 7)));
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }
    std::uint64_t count_ones() const noexcept;
    // Ones among bits [begin, end).
    std::uint64_t count_ones(std::uint64_t begin, std::uint64_t end) const noexcept;

    friend bool operator==(const BitStream&, const BitStream&) = default;

  private:
    std::vector<std::uint64_t> words_;
    std::uint64_t size_ = 0;
};

} // namespace ksq
