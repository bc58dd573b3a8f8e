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

#include "ksq/formats.hpp"

#include <cstring>
#include <fstream>
#include <string>
#include <string_view>

#include "ksq/error.hpp"

namespace ksq {
namespace {

constexpr std::string_view kTraceMagic = "KSQTRACE";
constexpr std::string_view kBitsMagic = "KSQBITS1";

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v)
{
    for (int i = 0; i < 8; ++i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

std::uint64_t get_u64(std::span<const std::uint8_t> bytes, std::size_t at)
{
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v |= static_cast<std::uint64_t>(bytes[at + i]) << (8 * i);
    }
    return v;
}

void check_magic(std::span<const std::uint8_t> bytes, std::string_view magic, const char* what)
{
    if (bytes.size() < magic.size()) {
        throw ParseError(ParseErrorKind::kTruncatedHeader, bytes.size(),
                         std::string(what) + ": truncated header");
    }
    if (std::memcmp(bytes.data(), magic.data(), magic.size()) != 0) {
        throw ParseError(ParseErrorKind::kBadMagic, 0,
                         std::string(what) + ": bad magic, expected \"" + std::string(magic) + "\"");
    }
}

void check_body_length(std::uint64_t expected, std::uint64_t actual, std::size_t header,
                       const char* what)
{
    if (actual < expected) {
        throw ParseError(ParseErrorKind::kTruncatedBody, header + actual,
                         std::string(what) + ": truncated body, expected " + std::to_string(expected)
                             + " bytes, found " + std::to_string(actual));
    }
    if (actual > expected) {
        throw ParseError(ParseErrorKind::kTrailingData, header + expected,
                         std::string(what) + ": " + std::to_string(actual - expected)
                             + " unexpected bytes after body of " + std::to_string(expected));
    }
}

} // namespace

std::vector<std::uint8_t> encode_trace(const RawStream& stream)
{
    std::vector<std::uint8_t> out;
    out.reserve(kTraceHeaderSize + stream.size());
    out.insert(out.end(), kTraceMagic.begin(), kTraceMagic.end());
    out.push_back(kTraceVersion);
    put_u64(out, stream.size());
    for (Symbol s : stream.symbols()) {
        out.push_back(static_cast<std::uint8_t>(s));
    }
    return out;
}

RawStream decode_trace(std::span<const std::uint8_t> bytes)
{
    constexpr const char* what = "trace file";
    check_magic(bytes, kTraceMagic, what);
    if (bytes.size() < kTraceHeaderSize) {
        throw ParseError(ParseErrorKind::kTruncatedHeader, bytes.size(),
                         "trace file: truncated header");
    }
    if (bytes[8] != kTraceVersion) {
        throw ParseError(ParseErrorKind::kBadVersion, 8,
                         "trace file: unsupported version " + std::to_string(bytes[8]));
    }
    const std::uint64_t count = get_u64(bytes, 9);
    check_body_length(count, bytes.size() - kTraceHeaderSize, kTraceHeaderSize, what);
    std::vector<Symbol> symbols(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        const std::uint8_t b = bytes[kTraceHeaderSize + k];
        if (b > 2) {
            const std::uint64_t offset = kTraceHeaderSize + k;
            throw ParseError(ParseErrorKind::kBadSymbol, offset,
                             "trace file: undefined symbol byte " + std::to_string(b)
                                 + " at offset " + std::to_string(offset));
        }
        symbols[k] = static_cast<Symbol>(b);
    }
    return RawStream(std::move(symbols));
}

std::vector<std::uint8_t> pack_bits(const BitStream& bits)
{
    const std::uint64_t n_bytes = (bits.size() + 7) / 8;
    std::vector<std::uint8_t> out;
    out.reserve(kBitsHeaderSize + n_bytes);
    out.insert(out.end(), kBitsMagic.begin(), kBitsMagic.end());
    put_u64(out, bits.size());
    for (std::uint64_t k = 0; k < n_bytes; ++k) {
        out.push_back(bits.byte(k));
    }
    return out;
}

BitStream unpack_bits(std::span<const std::uint8_t> bytes)
{
    constexpr const char* what = "bit file";
    check_magic(bytes, kBitsMagic, what);
    if (bytes.size() < kBitsHeaderSize) {
        throw ParseError(ParseErrorKind::kTruncatedHeader, bytes.size(),
                         "bit file: truncated header");
    }
    const std::uint64_t count = get_u64(bytes, 8);
    if (count > UINT64_MAX - 7) {
        throw ParseError(ParseErrorKind::kTruncatedBody, kBitsHeaderSize,
                         "bit file: implausible bit count");
    }
    const std::uint64_t n_bytes = (count + 7) / 8;
    check_body_length(n_bytes, bytes.size() - kBitsHeaderSize, kBitsHeaderSize, what);
    if (count % 8 != 0) {
        const std::uint8_t last = bytes[kBitsHeaderSize + n_bytes - 1];
        if (last >> (count % 8) != 0) {
            throw ParseError(ParseErrorKind::kNonzeroPadding, kBitsHeaderSize + n_bytes - 1,
                             "bit file: nonzero padding bits in final byte");
        }
    }
    std::vector<std::uint64_t> words((count + 63) / 64, 0);
    for (std::uint64_t k = 0; k < n_bytes; ++k) {
        words[k / 8] |= static_cast<std::uint64_t>(bytes[kBitsHeaderSize + k]) << (8 * (k % 8));
    }
    return BitStream::from_words(std::move(words), count);
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string() + " for reading");
    }
    in.seekg(0, std::ios::end);
    const auto size = in.tellg();
    if (size < 0) {
        throw IoError("cannot determine size of " + path.string());
    }
    in.seekg(0, std::ios::beg);
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size));
    if (!bytes.empty() && !in.read(reinterpret_cast<char*>(bytes.data()),
                                   static_cast<std::streamsize>(bytes.size()))) {
        throw IoError("failed reading " + path.string());
    }
    return bytes;
}

void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open " + tmp.string() + " for writing");
        }
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw IoError("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move output into place at " + path.string());
    }
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text)
{
    write_file_atomic(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

void write_trace(const RawStream& stream, const std::filesystem::path& path)
{
    write_file_atomic(path, encode_trace(stream));
}

RawStream read_trace(const std::filesystem::path& path)
{
    return decode_trace(read_file(path));
}

void write_bits(const BitStream& bits, const std::filesystem::path& path)
{
    write_file_atomic(path, pack_bits(bits));
}

BitStream read_bits(const std::filesystem::path& path)
{
    return unpack_bits(read_file(path));
}

} // namespace ksq
