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
#include <string>

namespace ksq {

// Invalid argument or violated precondition.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Rejected configuration; carries the offending key.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string key, const std::string& what)
        : std::runtime_error(what), key_(std::move(key)) {}
    const std::string& key() const noexcept { return key_; }

  private:
    std::string key_;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
    kBadMagic,
    kBadVersion,
    kTruncatedHeader,
    kTruncatedBody,
    kTrailingData,
    kBadSymbol,
    kNonzeroPadding,
};

// Malformed file content. offset is the byte offset where parsing failed.
class ParseError : public std::runtime_error {
  public:
    ParseError(ParseErrorKind kind, std::uint64_t offset, const std::string& what)
        : std::runtime_error(what), kind_(kind), offset_(offset) {}
    ParseErrorKind kind() const noexcept { return kind_; }
    std::uint64_t offset() const noexcept { return offset_; }

  private:
    ParseErrorKind kind_;
    std::uint64_t offset_;
};

} // namespace ksq
