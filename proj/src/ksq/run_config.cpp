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

#include "ksq/run_config.hpp"

#include <charconv>
#include <set>

#include "ksq/error.hpp"
#include "ksq/formats.hpp"

namespace ksq {
namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, const char* expected)
{
    throw ConfigError(std::string(key), "invalid value \"" + std::string(value) + "\" for key "
                                            + std::string(key) + ": expected " + expected);
}

std::uint64_t parse_u64(std::string_view key, std::string_view value)
{
    std::uint64_t v = 0;
    const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || end != value.data() + value.size()) {
        bad_value(key, value, "a nonnegative integer");
    }
    return v;
}

double parse_double(std::string_view key, std::string_view value)
{
    double v = 0.0;
    const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || end != value.data() + value.size()) {
        bad_value(key, value, "a real number");
    }
    return v;
}

bool parse_bool(std::string_view key, std::string_view value)
{
    if (value == "true" || value == "1" || value == "yes") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no") {
        return false;
    }
    bad_value(key, value, "true or false");
}

IQPoint parse_point(std::string_view key, std::string_view value)
{
    const auto comma = value.find(',');
    if (comma == std::string_view::npos) {
        bad_value(key, value, "\"i, q\"");
    }
    return {parse_double(key, trim(value.substr(0, comma))),
            parse_double(key, trim(value.substr(comma + 1)))};
}

} // namespace

void RunConfig::set(std::string_view key, std::string_view value)
{
    value = trim(value);
    NoiseParams& noise = protocol.noise;
    if (key == "trials") {
        protocol.n_trials = parse_u64(key, value);
    } else if (key == "seed") {
        protocol.seed = parse_u64(key, value);
    } else if (key == "ideal") {
        protocol.ideal = parse_bool(key, value);
    } else if (key == "p_thermal_1") {
        noise.p_thermal_1 = parse_double(key, value);
    } else if (key == "p_thermal_2") {
        noise.p_thermal_2 = parse_double(key, value);
    } else if (key == "gate_amp_error") {
        noise.gate_amp_error = parse_double(key, value);
    } else if (key == "p_decay_10") {
        noise.p_decay_10 = parse_double(key, value);
    } else if (key == "p_decay_21") {
        noise.p_decay_21 = parse_double(key, value);
    } else if (key == "iq_center_0") {
        noise.iq_centers[0] = parse_point(key, value);
    } else if (key == "iq_center_1") {
        noise.iq_centers[1] = parse_point(key, value);
    } else if (key == "iq_center_2") {
        noise.iq_centers[2] = parse_point(key, value);
    } else if (key == "iq_sigma") {
        noise.iq_sigma = parse_double(key, value);
    } else if (key == "bucket_size") {
        bucket_size = parse_u64(key, value);
    } else if (key == "ss_limit") {
        ss_limit = parse_u64(key, value);
    } else if (key == "ss_witnesses") {
        const std::uint64_t w = parse_u64(key, value);
        if (w > UINT32_MAX) {
            bad_value(key, value, "a witness count below 2^32");
        }
        ss_witnesses = static_cast<std::uint32_t>(w);
    } else {
        throw ConfigError(std::string(key), "unknown configuration key " + std::string(key));
    }
}

void RunConfig::validate() const
{
    protocol.validate();
    if (bucket_size < 1) {
        throw ConfigError("bucket_size", "bucket_size must be at least 1");
    }
    if (ss_limit < 3) {
        throw ConfigError("ss_limit", "ss_limit must be at least 3");
    }
    if (ss_witnesses < 1) {
        throw ConfigError("ss_witnesses", "ss_witnesses must be at least 1");
    }
}

RunConfig RunConfig::parse(std::string_view text)
{
    RunConfig cfg;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("", "line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string_view key = trim(line.substr(0, eq));
        if (!seen.emplace(key).second) {
            throw ConfigError(std::string(key), "duplicate configuration key " + std::string(key));
        }
        cfg.set(key, line.substr(eq + 1));
    }
    cfg.validate();
    return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path)
{
    const auto bytes = read_file(path);
    return parse(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

} // namespace ksq
