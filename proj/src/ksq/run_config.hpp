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
#include <string>
#include <string_view>

#include "ksq/protocol.hpp"

namespace ksq {

inline constexpr std::uint64_t kDefaultBucketSize = 999302;

//---------------------------------------------------------------------------//
/*!
 * Pipeline configuration read from `key = value` text.
 *
 * Blank lines and `#` comments are ignored. Keys: trials, seed, ideal,
 * p_thermal_1, p_thermal_2, gate_amp_error, p_decay_10, p_decay_21,
 * iq_center_0, iq_center_1, iq_center_2 (as "i, q"), iq_sigma, bucket_size,
 * ss_limit, ss_witnesses. Unknown or repeated keys are rejected.
 */
struct RunConfig {
    ProtocolConfig protocol{1'000'000, 0, {}, false};
    std::uint64_t bucket_size = kDefaultBucketSize;
    std::uint64_t ss_limit = 100'000;
    std::uint32_t ss_witnesses = 64;

    // Throws ConfigError naming the key.
    void set(std::string_view key, std::string_view value);
    void validate() const;

    // Throws ConfigError; the result is validated.
    static RunConfig parse(std::string_view text);
    // Throws IoError or ConfigError.
    static RunConfig load(const std::filesystem::path& path);
};

} // namespace ksq
