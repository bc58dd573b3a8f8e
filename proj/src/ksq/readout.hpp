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

#include <array>
#include <cstdint>

#include "ksq/random.hpp"

namespace ksq {

enum class ReadoutLevel : std::uint8_t { L0 = 0, L1 = 1, L2 = 2 };

inline int index(ReadoutLevel l) noexcept { return static_cast<int>(l); }

struct IQPoint {
    double i = 0.0;
    double q = 0.0;

    friend bool operator==(const IQPoint&, const IQPoint&) = default;
};

//---------------------------------------------------------------------------//
/*!
 * Phenomenological imperfections of preparation, control and readout.
 *
 * Thermal populations are the probabilities of starting in |1> or |2>
 * instead of |0>. Gate error is the standard deviation of a relative
 * over-rotation applied independently to each pulse. Decay probabilities act
 * once, after projection: |1> -> |0> with p_decay_10 and |2> -> |1> with
 * p_decay_21 (the resulting |1> may decay further). IQ responses are the
 * level's center plus isotropic Gaussian noise.
 */
struct NoiseParams {
    double p_thermal_1 = 0.0013;
    double p_thermal_2 = 0.0002;
    double gate_amp_error = 0.005;
    double p_decay_10 = 0.072;
    double p_decay_21 = 0.14;
    std::array<IQPoint, 3> iq_centers{IQPoint{1.0, 0.0}, IQPoint{0.0, 1.0}, IQPoint{-1.0, 0.0}};
    double iq_sigma = 0.18;

    // Throws ConfigError naming the first offending field.
    void validate() const;

    // Every imperfection switched off; IQ centers kept.
    static NoiseParams noiseless();
};

ReadoutLevel thermal_init(const NoiseParams& params, RandomSource& rng);

// Draws level k with probability probs[k]; one uniform per call.
// Throws ValidationError unless probs are in [0,1] and sum to 1 within 1e-9.
ReadoutLevel sample_level(const std::array<double, 3>& probs, RandomSource& rng);

// Never increases the level index.
ReadoutLevel apply_relaxation(ReadoutLevel level, const NoiseParams& params, RandomSource& rng);

IQPoint synth_iq(ReadoutLevel level, const NoiseParams& params, RandomSource& rng);

// Nearest center in Euclidean distance; ties go to the lower level.
ReadoutLevel classify(IQPoint pt, const NoiseParams& params) noexcept;

// Monte-Carlo P(classify(synth_iq(L)) != L) with L uniform over the three
// levels. Requires n_samples >= 1e6.
double estimate_misclassification(const NoiseParams& params, std::uint64_t n_samples,
                                  RandomSource& rng);

} // namespace ksq
