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

#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "ksq/error.hpp"
#include "ksq/random.hpp"
#include "ksq/stats.hpp"

namespace ksq {
namespace {

BitStream from_string(const std::string& s)
{
    BitStream b;
    for (char c : s) {
        b.push_back(c == '1');
    }
    return b;
}

BitStream random_bits(std::uint64_t n, std::uint64_t seed)
{
    RandomSource rng(seed);
    BitStream b;
    b.reserve(n);
    for (std::uint64_t i = 0; i < n; i += 64) {
        const auto w = rng.next_u64();
        for (std::uint64_t k = 0; k < 64 && i + k < n; ++k) {
            b.push_back((w >> k) & 1u);
        }
    }
    return b;
}

const std::string kPi100 =
    "1100100100001111110110101010001000100001011010001100001000110100110001001100011001100010100010111000";

TEST(Frequency, WorkedExamples)
{
    EXPECT_NEAR(monobit_test(from_string("1011010101")).p_value, 0.527089257, 1e-8);
    EXPECT_NEAR(monobit_test(from_string(kPi100)).p_value, 0.109598583, 1e-8);
}

TEST(BlockFrequency, WorkedExamples)
{
    EXPECT_NEAR(block_frequency_test(from_string("0110011010"), 3).p_value, 0.801251957, 1e-8);
    EXPECT_NEAR(block_frequency_test(from_string(kPi100), 10).p_value, 0.706438450, 1e-8);
}

TEST(Runs, WorkedExamples)
{
    EXPECT_NEAR(runs_test(from_string("1001101011")).p_value, 0.147232255, 1e-8);
    EXPECT_NEAR(runs_test(from_string(kPi100)).p_value, 0.500797918, 1e-8);
}

TEST(Runs, PrerequisiteFailure)
{
    const auto r = runs_test(from_string(std::string(90, '1') + std::string(10, '0')));
    EXPECT_EQ(r.p_value, 0.0);
    EXPECT_FALSE(r.passed);
    EXPECT_FALSE(r.note.empty());
}

TEST(LongestRun, WorkedExample)
{
    const auto r = longest_run_test(from_string(
        "11001100000101010110110001001100111000000000001001001101010100010001001111010110100000001101"
        "011111001100111001101101100010110010"));
    EXPECT_NEAR(r.statistic, 4.882605, 1e-5);
    EXPECT_NEAR(r.p_value, 0.180598, 1e-5);
    EXPECT_THROW(longest_run_test(from_string(std::string(100, '1'))), ValidationError);
}

TEST(ApproximateEntropy, WorkedExamples)
{
    EXPECT_NEAR(approximate_entropy_test(from_string("0100110101"), 3).p_value, 0.261961105, 1e-8);
    EXPECT_NEAR(approximate_entropy_test(from_string(kPi100), 2).p_value, 0.235300746, 1e-8);
}

TEST(Frequency, AllZerosIsDecisive)
{
    EXPECT_LT(monobit_test(from_string(std::string(100, '0'))).p_value, 1e-20);
}

TEST(NistSubset, ShortInputsNotApplicable)
{
    const auto tests = nist_subset(from_string("0101"));
    ASSERT_EQ(tests.size(), 5u);
    for (const auto& t : tests) {
        EXPECT_FALSE(t.applicable) << t.name;
        EXPECT_FALSE(t.passed);
        EXPECT_FALSE(t.note.empty());
    }
}

TEST(NistSubset, RandomStreamsPass)
{
    int failures = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto tests = nist_subset(random_bits(1'000'000, 1000 + seed));
        int passed = 0;
        for (const auto& t : tests) {
            ASSERT_TRUE(t.applicable) << t.name;
            EXPECT_GE(t.p_value, 0.0);
            EXPECT_LE(t.p_value, 1.0);
            passed += t.passed;
        }
        EXPECT_GE(passed, 4) << "seed " << seed;
        failures += 5 - passed;
    }
    // 100 tests at alpha 0.01: P(more than 6 failures) < 1e-3.
    EXPECT_LE(failures, 6);
}

TEST(NistSubset, ConstantStreamFails)
{
    const auto tests = nist_subset(from_string(std::string(10'000, '1')));
    for (const auto& t : tests) {
        if (t.applicable) {
            EXPECT_FALSE(t.passed) << t.name;
        }
    }
}

TEST(Entropy, Extremes)
{
    EXPECT_EQ(entropy_per_byte(from_string(std::string(800, '0'))), 0.0);
    BitStream cycle;
    for (int rep = 0; rep < 3; ++rep) {
        for (int v = 0; v < 256; ++v) {
            for (int k = 0; k < 8; ++k) {
                cycle.push_back((v >> k) & 1);
            }
        }
    }
    EXPECT_NEAR(entropy_per_byte(cycle), 8.0, 1e-12);
    EXPECT_THROW(entropy_per_byte(from_string("0101010")), ValidationError);
}

TEST(Entropy, InvariantUnderBytePermutation)
{
    const auto b = random_bits(80'000, 3);
    BitStream reversed;
    const std::uint64_t n_bytes = b.size() / 8;
    for (std::uint64_t k = n_bytes; k-- > 0;) {
        for (int j = 0; j < 8; ++j) {
            reversed.push_back(b[8 * k + j]);
        }
    }
    EXPECT_NEAR(entropy_per_byte(b), entropy_per_byte(reversed), 1e-12);
    // Plug-in bias at 10^4 bytes is about 255 / (2 * 10^4 * ln 2) = 0.018.
    EXPECT_GT(entropy_per_byte(b), 7.97);
}

TEST(Buckets, ConstantStream)
{
    const auto r = bucket_frequency(from_string(std::string(1000, '0')), 100);
    EXPECT_EQ(r.n_buckets, 10u);
    EXPECT_EQ(r.mean, 1.0);
    EXPECT_EQ(r.stddev, 0.0);
}

TEST(Buckets, RandomStreamSpread)
{
    const auto r = bucket_frequency(random_bits(4'000'000, 4), 10'000);
    EXPECT_EQ(r.n_buckets, 400u);
    // Binomial sd 0.005; sample sd of 400 buckets within about 10%.
    EXPECT_NEAR(r.stddev, 0.005, 0.0005);
    EXPECT_NEAR(r.mean, 0.5, 0.0005);
}

TEST(Buckets, EdgeCases)
{
    EXPECT_THROW(bucket_frequency(from_string("0101"), 10), ValidationError);
    EXPECT_THROW(bucket_frequency(from_string("0101"), 0), ValidationError);
    EXPECT_EQ(bucket_frequency(from_string("01011"), 4).stddev, 0.0);
}

TEST(StatsReport, BucketsOmittedWhenTooShort)
{
    const auto r = build_stats_report(random_bits(1000, 5), 999302);
    EXPECT_FALSE(r.buckets.has_value());
    EXPECT_EQ(r.n_bits, 1000u);
    EXPECT_EQ(r.tests.size(), 5u);
}

} // namespace
} // namespace ksq
