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
#include <array>
#include <cmath>

#include "ksq/error.hpp"
#include "ksq/readout.hpp"

namespace ksq {
namespace {

constexpr int kN = 1'000'000;

TEST(NoiseParams, DefaultsValidate)
{
    EXPECT_NO_THROW(NoiseParams{}.validate());
}

TEST(NoiseParams, ValidationNamesTheKey)
{
    auto expect_key = [](NoiseParams p, const char* key) {
        try {
            p.validate();
            ADD_FAILURE() << "accepted invalid " << key;
        } catch (const ConfigError& e) {
            EXPECT_EQ(e.key(), key);
        }
    };
    NoiseParams p;
    p.p_thermal_1 = 1.5;
    expect_key(p, "p_thermal_1");
    p = {};
    p.p_thermal_1 = 0.6;
    p.p_thermal_2 = 0.4;
    expect_key(p, "p_thermal_2");
    p = {};
    p.iq_sigma = 0.0;
    expect_key(p, "iq_sigma");
    p = {};
    p.iq_centers[2] = p.iq_centers[0];
    expect_key(p, "iq_center_2");
    p = {};
    p.p_decay_21 = -0.1;
    expect_key(p, "p_decay_21");
}

TEST(ThermalInit, NoiselessAlwaysGround)
{
    NoiseParams p;
    p.p_thermal_1 = p.p_thermal_2 = 0.0;
    RandomSource rng(1);
    for (int i = 0; i < 10000; ++i) {
        ASSERT_EQ(thermal_init(p, rng), ReadoutLevel::L0);
    }
}

TEST(ThermalInit, DefaultFrequencies)
{
    NoiseParams p;
    RandomSource rng(2);
    std::array<int, 3> hist{};
    for (int i = 0; i < kN; ++i) {
        ++hist[index(thermal_init(p, rng))];
    }
    // 1 - 0.0013 - 0.0002 = 0.9985; binomial 3 sigma = 1.16e-4.
    EXPECT_NEAR(hist[0] / double(kN), 0.9985, 1.2e-4);
    EXPECT_LT((hist[1] + hist[2]) / double(kN), 0.01);
}

TEST(SampleLevel, DeterministicDistribution)
{
    RandomSource rng(3);
    for (int i = 0; i < 10000; ++i) {
        ASSERT_EQ(sample_level({1, 0, 0}, rng), ReadoutLevel::L0);
    }
}

TEST(SampleLevel, BalancedWithZeroMiddle)
{
    RandomSource rng(4);
    std::array<int, 3> hist{};
    for (int i = 0; i < kN; ++i) {
        ++hist[index(sample_level({0.5, 0, 0.5}, rng))];
    }
    EXPECT_EQ(hist[1], 0);
    EXPECT_NEAR(hist[0] / double(kN), 0.5, 0.0015);
}

TEST(SampleLevel, ConsumesOneWord)
{
    RandomSource a(5), b(5);
    sample_level({0.2, 0.3, 0.5}, a);
    b.next_u64();
    EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(SampleLevel, RejectsMalformed)
{
    RandomSource rng(6);
    EXPECT_THROW(sample_level({0.5, 0.6, 0.0}, rng), ValidationError);
    EXPECT_THROW(sample_level({-0.1, 0.6, 0.5}, rng), ValidationError);
    EXPECT_THROW(sample_level({std::nan(""), 0.5, 0.5}, rng), ValidationError);
}

TEST(Relaxation, GroundIsStable)
{
    NoiseParams p;
    p.p_decay_10 = p.p_decay_21 = 1.0;
    RandomSource rng(7);
    EXPECT_EQ(apply_relaxation(ReadoutLevel::L0, p, rng), ReadoutLevel::L0);
}

TEST(Relaxation, DecayFrequencyFromFirstLevel)
{
    NoiseParams p;
    RandomSource rng(8);
    int decayed = 0;
    for (int i = 0; i < kN; ++i) {
        decayed += apply_relaxation(ReadoutLevel::L1, p, rng) == ReadoutLevel::L0;
    }
    EXPECT_NEAR(decayed / double(kN), 0.072, 0.0008);
}

TEST(Relaxation, CascadeLimitAndMonotone)
{
    NoiseParams p;
    p.p_decay_10 = p.p_decay_21 = 1.0;
    RandomSource rng(9);
    EXPECT_EQ(apply_relaxation(ReadoutLevel::L2, p, rng), ReadoutLevel::L0);
    NoiseParams q;
    q.p_decay_10 = 0.5;
    q.p_decay_21 = 0.5;
    for (int i = 0; i < 10000; ++i) {
        for (auto l : {ReadoutLevel::L0, ReadoutLevel::L1, ReadoutLevel::L2}) {
            ASSERT_LE(index(apply_relaxation(l, q, rng)), index(l));
        }
    }
}

TEST(SynthIq, NoiselessLimitReturnsCenter)
{
    NoiseParams p;
    p.iq_sigma = 1e-300;
    RandomSource rng(10);
    for (auto l : {ReadoutLevel::L0, ReadoutLevel::L1, ReadoutLevel::L2}) {
        const auto pt = synth_iq(l, p, rng);
        EXPECT_NEAR(pt.i, p.iq_centers[index(l)].i, 1e-290);
        EXPECT_NEAR(pt.q, p.iq_centers[index(l)].q, 1e-290);
    }
}

TEST(SynthIq, MeanAndVariance)
{
    NoiseParams p;
    RandomSource rng(11);
    double si = 0, sq = 0, si2 = 0, sq2 = 0;
    for (int n = 0; n < kN; ++n) {
        const auto pt = synth_iq(ReadoutLevel::L0, p, rng);
        si += pt.i;
        sq += pt.q;
        si2 += pt.i * pt.i;
        sq2 += pt.q * pt.q;
    }
    const double mi = si / kN, mq = sq / kN;
    EXPECT_NEAR(mi, 1.0, 0.001);
    EXPECT_NEAR(mq, 0.0, 0.001);
    const double var = 0.18 * 0.18;
    EXPECT_NEAR(si2 / kN - mi * mi, var, 0.05 * var);
    EXPECT_NEAR(sq2 / kN - mq * mq, var, 0.05 * var);
}

TEST(Classify, WorkedExamples)
{
    NoiseParams p;
    EXPECT_EQ(classify(p.iq_centers[1], p), ReadoutLevel::L1);
    EXPECT_EQ(classify({0.9, 0.1}, p), ReadoutLevel::L0);
    // Equidistant from c0 = (1,0) and c1 = (0,1).
    EXPECT_EQ(classify({0.5, 0.5}, p), ReadoutLevel::L0);
    EXPECT_EQ(classify({0.0, -5.0}, p), ReadoutLevel::L0); // equidistant from c0 and c2
}

TEST(Classify, TranslationInvariant)
{
    NoiseParams p;
    RandomSource rng(12);
    for (int n = 0; n < 20000; ++n) {
        const IQPoint pt{4 * rng.uniform() - 2, 4 * rng.uniform() - 2};
        const IQPoint shift{8 * rng.uniform() - 4, 8 * rng.uniform() - 4};
        NoiseParams moved = p;
        for (auto& c : moved.iq_centers) {
            c = {c.i + shift.i, c.q + shift.q};
        }
        // Skip near-ties, where rounding of the shift may flip the choice.
        std::array<double, 3> d;
        for (int k = 0; k < 3; ++k) {
            d[k] = std::hypot(pt.i - p.iq_centers[k].i, pt.q - p.iq_centers[k].q);
        }
        std::sort(d.begin(), d.end());
        if (d[1] - d[0] < 1e-9) {
            continue;
        }
        ASSERT_EQ(classify(pt, p), classify({pt.i + shift.i, pt.q + shift.q}, moved));
    }
}

TEST(Misclassification, DefaultCalibration)
{
    NoiseParams p;
    RandomSource rng(13);
    // 1e7 samples (~570 expected errors) resolve the factor-2 band around 6e-5.
    const double e = estimate_misclassification(p, 10'000'000, rng);
    EXPECT_GT(e, 3e-5);
    EXPECT_LT(e, 1.2e-4);
}

TEST(Misclassification, Limits)
{
    NoiseParams p;
    RandomSource rng(14);
    p.iq_sigma = 1e-6;
    EXPECT_EQ(estimate_misclassification(p, 1'000'000, rng), 0.0);
    p.iq_sigma = 10.0;
    EXPECT_GT(estimate_misclassification(p, 1'000'000, rng), 0.5);
    EXPECT_THROW(estimate_misclassification(p, 1000, rng), ValidationError);
}

TEST(Misclassification, MonotoneInSigmaWithCommonRandomNumbers)
{
    double previous = -1.0;
    for (double sigma : {0.05, 0.1, 0.18, 0.25, 0.35, 0.5, 0.8, 1.5}) {
        NoiseParams p;
        p.iq_sigma = sigma;
        RandomSource rng(15);
        const double e = estimate_misclassification(p, 1'000'000, rng);
        EXPECT_GE(e, previous) << "sigma " << sigma;
        previous = e;
    }
}

TEST(Readout, SameSeedSameDraws)
{
    NoiseParams p;
    RandomSource a(16, 3), b(16, 3);
    for (int i = 0; i < 1000; ++i) {
        ASSERT_EQ(thermal_init(p, a), thermal_init(p, b));
        ASSERT_EQ(synth_iq(ReadoutLevel::L1, p, a), synth_iq(ReadoutLevel::L1, p, b));
    }
}

} // namespace
} // namespace ksq
