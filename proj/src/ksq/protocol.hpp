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
#include <span>
#include <vector>

#include "ksq/random.hpp"
#include "ksq/readout.hpp"
#include "ksq/spin_model.hpp"

namespace ksq {

// Zero <=> Sx = +1 (read out as |0>), One <=> Sx = -1 (|1>), Discard <=> Sx = 0 (|2>).
enum class Symbol : std::uint8_t { Zero = 0, One = 1, Discard = 2 };

Symbol encode_symbol(ReadoutLevel level) noexcept;

struct TrialRecord {
    ReadoutLevel true_level;       // after relaxation
    ReadoutLevel classified_level;
    IQPoint iq;
    Symbol symbol;
};

struct ProtocolConfig {
    std::uint64_t n_trials = 1;
    std::uint64_t seed = 0;
    NoiseParams noise;
    // Exact |0>, exact M^dagger, no relaxation and no IQ stage.
    bool ideal = false;

    void validate() const;
};

struct SymbolCounts {
    std::uint64_t zero = 0;
    std::uint64_t one = 0;
    std::uint64_t discard = 0;

    std::uint64_t total() const noexcept { return zero + one + discard; }
    friend bool operator==(const SymbolCounts&, const SymbolCounts&) = default;
};

// Ternary trial trace with running tallies.
class RawStream {
  public:
    RawStream() = default;
    // Throws ValidationError on a value outside the Symbol enumeration.
    explicit RawStream(std::vector<Symbol> symbols);

    void push_back(Symbol s);

    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    const SymbolCounts& counts() const noexcept { return counts_; }
    std::size_t size() const noexcept { return symbols_.size(); }

    friend bool operator==(const RawStream&, const RawStream&) = default;

  private:
    std::vector<Symbol> symbols_;
    SymbolCounts counts_;
};

struct BatchSummary {
    std::uint64_t n_trials = 0;
    SymbolCounts counts;
    // Fractions of all trials, with binomial standard errors.
    double p0 = 0.0, p1 = 0.0, p_discard = 0.0;
    double se_p0 = 0.0, se_p1 = 0.0, se_discard = 0.0;
};

BatchSummary summarize(const SymbolCounts& counts);

struct BatchResult {
    RawStream stream;
    BatchSummary summary;
};

// Born probabilities fed to the sampler in ideal mode: |<k|M^dagger|0>|^2.
std::array<double, 3> ideal_outcome_probabilities();

// M^dagger with each pulse over-rotated by an independent N(0, gate_amp_error)
// relative error.
Unitary3 noisy_measurement_unitary(const NoiseParams& params, RandomSource& rng);

TrialRecord run_trial(const ProtocolConfig& config, RandomSource& rng);

// Trial with the stream assigned to trial_index under config.seed.
TrialRecord run_trial_at(const ProtocolConfig& config, std::uint64_t trial_index);

// out[k] receives the symbol of trial first_trial + k.
void generate_symbols(const ProtocolConfig& config, std::uint64_t first_trial,
                      std::span<Symbol> out);

// Runs config.n_trials trials across `workers` threads (0 = hardware
// concurrency). The result is independent of the worker count.
BatchResult run_batch(const ProtocolConfig& config, unsigned workers = 1);

} // namespace ksq
