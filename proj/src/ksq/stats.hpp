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
#include <optional>
#include <string>
#include <vector>

#include "ksq/bitstream.hpp"

namespace ksq {

// Significance level for every statistical test.
inline constexpr double kAlpha = 0.01;

// Shannon entropy (bits) of the histogram of non-overlapping bytes.
// Throws ValidationError for fewer than 8 bits.
double entropy_per_byte(const BitStream& bits);

// Outcome of one SP 800-22 test. When applicable is false the statistic and
// p-value are meaningless and passed is false; `note` says why.
struct TestResult {
    std::string name;
    bool applicable = false;
    double statistic = 0.0;
    double p_value = 0.0;
    bool passed = false;
    std::string note;
};

// Individual tests compute their statistic for any length >= 1; the length
// gates live in nist_subset.
TestResult monobit_test(const BitStream& bits);
TestResult block_frequency_test(const BitStream& bits, std::uint64_t block_len);
TestResult runs_test(const BitStream& bits);
// Block length and class table chosen from the sequence length; n >= 128.
TestResult longest_run_test(const BitStream& bits);
TestResult approximate_entropy_test(const BitStream& bits, unsigned m);

// Frequency, block frequency, runs, longest run of ones and approximate
// entropy with SP 800-22 parameter choices for the given length.
std::vector<TestResult> nist_subset(const BitStream& bits);

struct BucketAnalysis {
    std::uint64_t bucket_size = 0;
    std::uint64_t n_buckets = 0;
    double mean = 0.0;   // of per-bucket zero frequencies
    double stddev = 0.0; // sample standard deviation; 0 for a single bucket
};

// Complete buckets only. Throws ValidationError if there are none.
BucketAnalysis bucket_frequency(const BitStream& bits, std::uint64_t bucket_size);

struct StatsReport {
    std::uint64_t n_bits = 0;
    double zero_fraction = 0.0;
    double entropy_bits_per_byte = 0.0;
    std::vector<TestResult> tests;
    std::optional<BucketAnalysis> buckets;
};

StatsReport build_stats_report(const BitStream& bits, std::uint64_t bucket_size);

} // namespace ksq
