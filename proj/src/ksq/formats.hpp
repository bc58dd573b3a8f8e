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
#include <filesystem>
#include <span>
#include <vector>

#include "ksq/bitstream.hpp"
#include "ksq/protocol.hpp"

namespace ksq {

//---------------------------------------------------------------------------//
// Trace file: "KSQTRACE", version byte, u64 LE trial count, then one byte per
// trial (0x00 Zero, 0x01 One, 0x02 Discard).
//
// Bit file: "KSQBITS1", u64 LE bit count, then ceil(count / 8) bytes of bits
// packed LSB first with zero padding in the final byte.
//---------------------------------------------------------------------------//

inline constexpr std::uint8_t kTraceVersion = 1;
inline constexpr std::size_t kTraceHeaderSize = 8 + 1 + 8;
inline constexpr std::size_t kBitsHeaderSize = 8 + 8;

std::vector<std::uint8_t> encode_trace(const RawStream& stream);
// Throws ParseError.
RawStream decode_trace(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> pack_bits(const BitStream& bits);
// Throws ParseError.
BitStream unpack_bits(std::span<const std::uint8_t> bytes);

// Whole-file helpers. Writes go to a sibling temporary and are renamed into
// place. Throw IoError (and ParseError on read).
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

void write_trace(const RawStream& stream, const std::filesystem::path& path);
RawStream read_trace(const std::filesystem::path& path);
void write_bits(const BitStream& bits, const std::filesystem::path& path);
BitStream read_bits(const std::filesystem::path& path);

} // namespace ksq
