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

#include "ksq/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <new>
#include <numbers>
#include <thread>

#include "ksq/error.hpp"

namespace ksq {

Symbol encode_symbol(ReadoutLevel level) noexcept
{
    switch (level) {
    case ReadoutLevel::L0:
        return Symbol::Zero;
    case ReadoutLevel::L1:
        return Symbol::One;
    case ReadoutLevel::L2:
        break;
    }
    return Symbol::Discard;
}

void ProtocolConfig::validate() const
{
    if (n_trials < 1) {
        throw ConfigError("trials", "trials must be at least 1");
    }
    noise.validate();
}

RawStream::RawStream(std::vector<Symbol> symbols) : symbols_(std::move(symbols))
{
    for (Symbol s : symbols_) {
        switch (s) {
        case Symbol::Zero:
            ++counts_.zero;
            break;
        case Symbol::One:
            ++counts_.one;
            break;
        case Symbol::Discard:
            ++counts_.discard;
            break;
        default:
            throw ValidationError("raw stream holds an undefined symbol");
        }
    }
}

void RawStream::push_back(Symbol s)
{
    switch (s) {
    case Symbol::Zero:
        ++counts_.zero;
        break;
    case Symbol::One:
        ++counts_.one;
        break;
    case Symbol::Discard:
        ++counts_.discard;
        break;
    default:
        throw ValidationError("undefined symbol");
    }
    symbols_.push_back(s);
}

BatchSummary summarize(const SymbolCounts& counts)
{
    BatchSummary s;
    s.n_trials = counts.total();
    s.counts = counts;
    if (s.n_trials == 0) {
        return s;
    }
    const double n = static_cast<double>(s.n_trials);
    auto se = [n](double p) { return std::sqrt(p * (1.0 - p) / n); };
    s.p0 = static_cast<double>(counts.zero) / n;
    s.p1 = static_cast<double>(counts.one) / n;
    s.p_discard = static_cast<double>(counts.discard) / n;
    s.se_p0 = se(s.p0);
    s.se_p1 = se(s.p1);
    s.se_discard = se(s.p_discard);
    return s;
}

namespace {

const Unitary3& ideal_unitary()
{
    static const Unitary3 u = measurement_unitary();
    return u;
}

std::array<double, 3> populations(const QutritState& s) noexcept
{
    return {std::norm(s[0]), std::norm(s[1]), std::norm(s[2])};
}

} // namespace

std::array<double, 3> ideal_outcome_probabilities()
{
    static const std::array<double, 3> p = populations(ideal_unitary().apply(QutritState::basis(0)));
    return p;
}

Unitary3 noisy_measurement_unitary(const NoiseParams& params, RandomSource& rng)
{
    const auto [z01, z12] = rng.normal_pair();
    constexpr double half_pi = std::numbers::pi / 2;
    return rotation(Subspace::k01, half_pi * (1.0 + params.gate_amp_error * z01))
           * rotation(Subspace::k12, half_pi * (1.0 + params.gate_amp_error * z12));
}

TrialRecord run_trial(const ProtocolConfig& config, RandomSource& rng)
{
    const NoiseParams& noise = config.noise;
    if (config.ideal) {
        const auto level = sample_level(ideal_outcome_probabilities(), rng);
        return {level, level, noise.iq_centers[index(level)], encode_symbol(level)};
    }
    const ReadoutLevel initial = thermal_init(noise, rng);
    const Unitary3 m_dag = noisy_measurement_unitary(noise, rng);
    const QutritState rotated = m_dag.apply(QutritState::basis(index(initial)));
    const ReadoutLevel projected = sample_level(populations(rotated), rng);
    const ReadoutLevel relaxed = apply_relaxation(projected, noise, rng);
    const IQPoint iq = synth_iq(relaxed, noise, rng);
    const ReadoutLevel classified = classify(iq, noise);
    return {relaxed, classified, iq, encode_symbol(classified)};
}

TrialRecord run_trial_at(const ProtocolConfig& config, std::uint64_t trial_index)
{
    RandomSource rng(config.seed, trial_index);
    return run_trial(config, rng);
}

void generate_symbols(const ProtocolConfig& config, std::uint64_t first_trial,
                      std::span<Symbol> out)
{
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = run_trial_at(config, first_trial + k).symbol;
    }
}

BatchResult run_batch(const ProtocolConfig& config, unsigned workers)
{
    config.validate();
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    const std::uint64_t n = config.n_trials;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n));

    std::vector<Symbol> symbols;
    try {
        symbols.resize(n);
    } catch (const std::length_error&) {
        throw std::bad_alloc();
    }

    const std::span<Symbol> all(symbols);
    if (workers == 1) {
        generate_symbols(config, 0, all);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> failures(workers);
        const std::uint64_t chunk = (n + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = std::min(n, chunk * w);
            const std::uint64_t end = std::min(n, begin + chunk);
            pool.emplace_back([&, w, begin, end] {
                try {
                    generate_symbols(config, begin, all.subspan(begin, end - begin));
                } catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
        for (const auto& f : failures) {
            if (f) {
                std::rethrow_exception(f);
            }
        }
    }

    BatchResult result{RawStream(std::move(symbols)), {}};
    result.summary = summarize(result.stream.counts());
    return result;
}

} // namespace ksq
