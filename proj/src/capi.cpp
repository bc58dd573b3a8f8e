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

#include "ksqrng/ksqrng.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>

#include "ksq/certify.hpp"
#include "ksq/consumer.hpp"
#include "ksq/error.hpp"
#include "ksq/extract.hpp"
#include "ksq/formats.hpp"
#include "ksq/protocol.hpp"
#include "ksq/reports.hpp"
#include "ksq/run_config.hpp"
#include "ksq/stats.hpp"

struct ksq_config {
    ksq::RunConfig cfg;
};

struct ksq_trace {
    ksq::RawStream stream;
};

struct ksq_bits {
    ksq::BitStream bits;
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_last_error_key;

ksq_status fail(ksq_status status, const char* message)
{
    g_last_error = message;
    return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
ksq_status guarded(F&& body)
{
    g_last_error.clear();
    g_last_error_key.clear();
    try {
        body();
        return KSQ_OK;
    } catch (const ksq::ConfigError& e) {
        g_last_error_key = e.key();
        return fail(KSQ_ERR_CONFIG, e.what());
    } catch (const ksq::ParseError& e) {
        return fail(KSQ_ERR_PARSE, e.what());
    } catch (const ksq::IoError& e) {
        return fail(KSQ_ERR_IO, e.what());
    } catch (const ksq::BitSourceExhausted& e) {
        return fail(KSQ_ERR_EXHAUSTED, e.what());
    } catch (const ksq::ValidationError& e) {
        return fail(KSQ_ERR_ANALYSIS, e.what());
    } catch (const std::bad_alloc&) {
        return fail(KSQ_ERR_RESOURCE, "out of memory");
    } catch (const std::exception& e) {
        return fail(KSQ_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(KSQ_ERR_INTERNAL, "unknown error");
    }
}

char* to_c_string(const std::string& s)
{
    auto* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_report(char** report, const std::string& text)
{
    if (report != nullptr) {
        *report = to_c_string(text);
    }
}

#define KSQ_REQUIRE(cond)                                                                   \
    do {                                                                                    \
        if (!(cond)) {                                                                      \
            g_last_error_key.clear();                                                       \
            return fail(KSQ_ERR_INVALID_ARGUMENT, "invalid argument: " #cond);              \
        }                                                                                   \
    } while (0)

} // namespace

extern "C" {

KSQ_API const char* ksq_version(void)
{
    return "0.1.0";
}

KSQ_API const char* ksq_last_error(void)
{
    return g_last_error.c_str();
}

KSQ_API const char* ksq_last_error_key(void)
{
    return g_last_error_key.c_str();
}

KSQ_API void ksq_string_free(char* s)
{
    delete[] s;
}

KSQ_API ksq_status ksq_config_new(ksq_config** out)
{
    KSQ_REQUIRE(out != nullptr);
    return guarded([&] { *out = new ksq_config{}; });
}

KSQ_API ksq_status ksq_config_load(const char* path, ksq_config** out)
{
    KSQ_REQUIRE(path != nullptr && out != nullptr);
    return guarded([&] { *out = new ksq_config{ksq::RunConfig::load(path)}; });
}

KSQ_API ksq_status ksq_config_parse(const char* text, ksq_config** out)
{
    KSQ_REQUIRE(text != nullptr && out != nullptr);
    return guarded([&] { *out = new ksq_config{ksq::RunConfig::parse(text)}; });
}

KSQ_API ksq_status ksq_config_set(ksq_config* cfg, const char* key, const char* value)
{
    KSQ_REQUIRE(cfg != nullptr && key != nullptr && value != nullptr);
    return guarded([&] {
        ksq::RunConfig updated = cfg->cfg;
        updated.set(key, value);
        updated.validate();
        cfg->cfg = updated;
    });
}

KSQ_API ksq_status ksq_config_get_u64(const ksq_config* cfg, const char* key, uint64_t* value)
{
    KSQ_REQUIRE(cfg != nullptr && key != nullptr && value != nullptr);
    const ksq::RunConfig& c = cfg->cfg;
    const std::string k = key;
    if (k == "trials") {
        *value = c.protocol.n_trials;
    } else if (k == "seed") {
        *value = c.protocol.seed;
    } else if (k == "ideal") {
        *value = c.protocol.ideal ? 1 : 0;
    } else if (k == "bucket_size") {
        *value = c.bucket_size;
    } else if (k == "ss_limit") {
        *value = c.ss_limit;
    } else if (k == "ss_witnesses") {
        *value = c.ss_witnesses;
    } else {
        g_last_error_key = k;
        return fail(KSQ_ERR_CONFIG, ("no integer configuration key " + k).c_str());
    }
    return KSQ_OK;
}

KSQ_API void ksq_config_free(ksq_config* cfg)
{
    delete cfg;
}

KSQ_API ksq_status ksq_generate(const ksq_config* cfg, unsigned workers, ksq_trace** out,
                                char** report)
{
    KSQ_REQUIRE(cfg != nullptr && out != nullptr);
    return guarded([&] {
        auto batch = ksq::run_batch(cfg->cfg.protocol, workers);
        const std::string text = ksq::generation_report(cfg->cfg.protocol, batch.summary);
        auto* trace = new ksq_trace{std::move(batch.stream)};
        try {
            set_report(report, text);
        } catch (...) {
            delete trace;
            throw;
        }
        *out = trace;
    });
}

KSQ_API ksq_status ksq_trace_read(const char* path, ksq_trace** out)
{
    KSQ_REQUIRE(path != nullptr && out != nullptr);
    return guarded([&] { *out = new ksq_trace{ksq::read_trace(path)}; });
}

KSQ_API ksq_status ksq_trace_write(const ksq_trace* trace, const char* path)
{
    KSQ_REQUIRE(trace != nullptr && path != nullptr);
    return guarded([&] { ksq::write_trace(trace->stream, path); });
}

KSQ_API ksq_status ksq_trace_counts(const ksq_trace* trace, uint64_t* zero, uint64_t* one,
                                    uint64_t* discard)
{
    KSQ_REQUIRE(trace != nullptr);
    const auto& c = trace->stream.counts();
    if (zero) {
        *zero = c.zero;
    }
    if (one) {
        *one = c.one;
    }
    if (discard) {
        *discard = c.discard;
    }
    return KSQ_OK;
}

KSQ_API void ksq_trace_free(ksq_trace* trace)
{
    delete trace;
}

KSQ_API ksq_status ksq_certify(const ksq_trace* trace, char** report)
{
    KSQ_REQUIRE(trace != nullptr && report != nullptr);
    return guarded([&] {
        set_report(report, ksq::certification_report(ksq::build_report(trace->stream)));
    });
}

KSQ_API ksq_status ksq_extract(const ksq_trace* trace, ksq_bits** out, char** report)
{
    KSQ_REQUIRE(trace != nullptr && out != nullptr);
    return guarded([&] {
        ksq::VonNeumannExtractor ex;
        ex.push(ksq::binary_bits(trace->stream));
        const std::string text = ksq::extraction_report(ex.report());
        auto* bits = new ksq_bits{ex.take_output()};
        try {
            set_report(report, text);
        } catch (...) {
            delete bits;
            throw;
        }
        *out = bits;
    });
}

KSQ_API ksq_status ksq_bits_from_bytes(const uint8_t* bits, uint64_t n_bits, ksq_bits** out)
{
    KSQ_REQUIRE(out != nullptr && (bits != nullptr || n_bits == 0));
    KSQ_REQUIRE(std::all_of(bits, bits + n_bits, [](uint8_t b) { return b <= 1; }));
    return guarded([&] {
        auto* b = new ksq_bits{};
        try {
            b->bits = ksq::BitStream::from_bits(std::vector<std::uint8_t>(bits, bits + n_bits));
        } catch (...) {
            delete b;
            throw;
        }
        *out = b;
    });
}

KSQ_API ksq_status ksq_bits_read(const char* path, ksq_bits** out)
{
    KSQ_REQUIRE(path != nullptr && out != nullptr);
    return guarded([&] { *out = new ksq_bits{ksq::read_bits(path)}; });
}

KSQ_API ksq_status ksq_bits_write(const ksq_bits* bits, const char* path)
{
    KSQ_REQUIRE(bits != nullptr && path != nullptr);
    return guarded([&] { ksq::write_bits(bits->bits, path); });
}

KSQ_API ksq_status ksq_bits_length(const ksq_bits* bits, uint64_t* n_bits)
{
    KSQ_REQUIRE(bits != nullptr && n_bits != nullptr);
    *n_bits = bits->bits.size();
    return KSQ_OK;
}

KSQ_API void ksq_bits_free(ksq_bits* bits)
{
    delete bits;
}

KSQ_API ksq_status ksq_stats(const ksq_bits* bits, uint64_t bucket_size, char** report,
                             unsigned* tests_passed, unsigned* tests_applicable)
{
    KSQ_REQUIRE(bits != nullptr && report != nullptr && bucket_size >= 1);
    return guarded([&] {
        const auto r = ksq::build_stats_report(bits->bits, bucket_size);
        unsigned passed = 0, applicable = 0;
        for (const auto& t : r.tests) {
            applicable += t.applicable;
            passed += t.passed;
        }
        set_report(report, ksq::stats_report(r));
        if (tests_passed) {
            *tests_passed = passed;
        }
        if (tests_applicable) {
            *tests_applicable = applicable;
        }
    });
}

KSQ_API ksq_status ksq_consume_ss(const ksq_bits* bits, uint64_t limit, uint32_t witnesses,
                                  char** report, uint64_t* non_composite)
{
    KSQ_REQUIRE(bits != nullptr && report != nullptr);
    return guarded([&] {
        ksq::BitCursor cursor(bits->bits);
        const auto r = ksq::carmichael_harness(limit, cursor, witnesses);
        set_report(report, ksq::consumer_report(limit, witnesses, r));
        if (non_composite) {
            *non_composite = r.verdicts.size() - r.composites;
        }
    });
}

} // extern "C"
