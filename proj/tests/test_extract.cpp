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

#include <algorithm>
#include <cmath>

#include "ksq/extract.hpp"
#include "ksq/random.hpp"

namespace ksq {
namespace {

BitStream random_bits(std::uint64_t n, double p_one, std::uint64_t seed)
{
    RandomSource rng(seed);
    BitStream b;
    b.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        b.push_back(rng.uniform() < p_one);
    }
    return b;
}

BitStream complement(const BitStream& b)
{
    BitStream out;
    for (std::uint64_t i = 0; i < b.size(); ++i) {
        out.push_back(!b[i]);
    }
    return out;
}

TEST(BinaryBits, DropsDiscards)
{
    RawStream s({Symbol::Zero, Symbol::Discard, Symbol::One, Symbol::One, Symbol::Discard});
    EXPECT_EQ(binary_bits(s), (BitStream{0, 1, 1}));
}

TEST(VonNeumann, WorkedExamples)
{
    EXPECT_EQ(von_neumann_extract({0, 1, 1, 0, 0, 0, 1, 1}), (BitStream{0, 1}));
    EXPECT_EQ(von_neumann_extract({0, 1, 1}), (BitStream{0}));
    EXPECT_EQ(von_neumann_extract({}), BitStream{});
    EXPECT_EQ(von_neumann_extract({1}), BitStream{});
    EXPECT_EQ(von_neumann_extract({1, 1, 0, 0}), BitStream{});
}

TEST(VonNeumann, ComplementSymmetryAndLength)
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto in = random_bits(1000 + seed, 0.3, seed);
        const auto out = von_neumann_extract(in);
        EXPECT_LE(out.size(), in.size() / 2);
        EXPECT_EQ(von_neumann_extract(complement(in)), complement(out));
    }
}

TEST(VonNeumann, RemovesBias)
{
    const auto in = random_bits(10'000'000, 0.3, 77); // p0 = 0.7
    const auto out = von_neumann_extract(in);
    const double yield = double(out.size()) / double(in.size());
    EXPECT_NEAR(yield, expected_yield(0.7), 0.21 * 0.02);
    const double zeros = 1.0 - double(out.count_ones()) / double(out.size());
    EXPECT_NEAR(zeros, 0.5, 3 * 0.5 / std::sqrt(double(out.size())));
}

TEST(ExpectedYield, Values)
{
    EXPECT_DOUBLE_EQ(expected_yield(0.5), 0.25);
    EXPECT_NEAR(expected_yield(0.536), 0.248704, 1e-12);
    EXPECT_NEAR(expected_yield(0.7), 0.21, 1e-12);
}

TEST(Streaming, MatchesBatchUnderAnyChunking)
{
    const auto in = random_bits(100'001, 0.45, 5);
    const auto batch = von_neumann_extract(in);
    RandomSource rng(6);
    for (int trial = 0; trial < 5; ++trial) {
        VonNeumannExtractor ex;
        std::uint64_t i = 0;
        while (i < in.size()) {
            const std::uint64_t len = std::min<std::uint64_t>(in.size() - i, rng.next_u64() % 1000);
            BitStream chunk;
            for (std::uint64_t k = 0; k < len; ++k) {
                chunk.push_back(in[i + k]);
            }
            ex.push(chunk);
            i += len;
        }
        EXPECT_EQ(ex.output(), batch);
        const auto rep = ex.report();
        EXPECT_EQ(rep.input_bits, in.size());
        EXPECT_EQ(rep.pairs, in.size() / 2);
        EXPECT_EQ(rep.trailing_dropped, 1u);
        EXPECT_EQ(rep.output_bits, batch.size());
    }
}

} // namespace
} // namespace ksq
