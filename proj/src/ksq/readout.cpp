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

#include "ksq/readout.hpp"

#include <cmath>
#include <string>

#include "ksq/error.hpp"

namespace ksq {
namespace {

void require_probability(const char* key, double p)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ConfigError(key, std::string(key) + " must be a probability in [0, 1], got "
                                   + std::to_string(p));
    }
}

void require_finite(const char* key, double v)
{
    if (!std::isfinite(v)) {
        throw ConfigError(key, std::string(key) + " must be finite");
    }
}

} // namespace

void NoiseParams::validate() const
{
    require_probability("p_thermal_1", p_thermal_1);
    require_probability("p_thermal_2", p_thermal_2);
    if (!(p_thermal_1 + p_thermal_2 < 1.0)) {
        throw ConfigError("p_thermal_2", "p_thermal_1 + p_thermal_2 must be below 1");
    }
    require_finite("gate_amp_error", gate_amp_error);
    if (gate_amp_error < 0.0) {
        throw ConfigError("gate_amp_error", "gate_amp_error must be nonnegative");
    }
    require_probability("p_decay_10", p_decay_10);
    require_probability("p_decay_21", p_decay_21);
    static constexpr const char* kCenterKeys[] = {"iq_center_0", "iq_center_1", "iq_center_2"};
    for (int k = 0; k < 3; ++k) {
        require_finite(kCenterKeys[k], iq_centers[k].i);
        require_finite(kCenterKeys[k], iq_centers[k].q);
        for (int j = 0; j < k; ++j) {
            if (iq_centers[j] == iq_centers[k]) {
                throw ConfigError(kCenterKeys[k], std::string(kCenterKeys[k])
                                                      + " coincides with another IQ center");
            }
        }
    }
    require_finite("iq_sigma", iq_sigma);
    if (!(iq_sigma > 0.0)) {
        throw ConfigError("iq_sigma", "iq_sigma must be positive");
    }
}

NoiseParams NoiseParams::noiseless()
{
    NoiseParams p;
    p.p_thermal_1 = p.p_thermal_2 = 0.0;
    p.gate_amp_error = 0.0;
    p.p_decay_10 = p.p_decay_21 = 0.0;
    p.iq_sigma = 1e-300;
    return p;
}

ReadoutLevel thermal_init(const NoiseParams& params, RandomSource& rng)
{
    const double u = rng.uniform();
    if (u < params.p_thermal_1) {
        return ReadoutLevel::L1;
    }
    if (u < params.p_thermal_1 + params.p_thermal_2) {
        return ReadoutLevel::L2;
    }
    return ReadoutLevel::L0;
}

ReadoutLevel sample_level(const std::array<double, 3>& probs, RandomSource& rng)
{
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ValidationError("level probability outside [0, 1]");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw ValidationError("level probabilities do not sum to 1");
    }
    // Zero-probability levels are skipped, so they can never be returned.
    const double u = rng.uniform() * total;
    double cumulative = 0.0;
    int last = 0;
    for (int k = 0; k < 3; ++k) {
        if (probs[k] > 0.0) {
            last = k;
            cumulative += probs[k];
            if (u < cumulative) {
                return static_cast<ReadoutLevel>(k);
            }
        }
    }
    return static_cast<ReadoutLevel>(last);
}

ReadoutLevel apply_relaxation(ReadoutLevel level, const NoiseParams& params, RandomSource& rng)
{
    if (level == ReadoutLevel::L2) {
        if (rng.uniform() >= params.p_decay_21) {
            return ReadoutLevel::L2;
        }
        level = ReadoutLevel::L1;
    }
    if (level == ReadoutLevel::L1) {
        return rng.uniform() < params.p_decay_10 ? ReadoutLevel::L0 : ReadoutLevel::L1;
    }
    return level;
}

IQPoint synth_iq(ReadoutLevel level, const NoiseParams& params, RandomSource& rng)
{
    const auto [zi, zq] = rng.normal_pair();
    const IQPoint& c = params.iq_centers[index(level)];
    return {c.i + params.iq_sigma * zi, c.q + params.iq_sigma * zq};
}

ReadoutLevel classify(IQPoint pt, const NoiseParams& params) noexcept
{
    int best = 0;
    double best_d2 = 0.0;
    for (int k = 0; k < 3; ++k) {
        const double di = pt.i - params.iq_centers[k].i;
        const double dq = pt.q - params.iq_centers[k].q;
        const double d2 = di * di + dq * dq;
        if (k == 0 || d2 < best_d2) {
            best = k;
            best_d2 = d2;
        }
    }
    return static_cast<ReadoutLevel>(best);
}

double estimate_misclassification(const NoiseParams& params, std::uint64_t n_samples,
                                  RandomSource& rng)
{
    if (n_samples < 1'000'000) {
        throw ValidationError("misclassification estimate needs at least 1e6 samples");
    }
    std::uint64_t errors = 0;
    for (std::uint64_t n = 0; n < n_samples; ++n) {
        const auto level = static_cast<ReadoutLevel>(static_cast<int>(rng.uniform() * 3.0));
        if (classify(synth_iq(level, params, rng), params) != level) {
            ++errors;
        }
    }
    return static_cast<double>(errors) / static_cast<double>(n_samples);
}

} // namespace ksq
