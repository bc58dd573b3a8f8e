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

// ksqrng command-line front end. Talks to the pipeline only through the C API.
//
// Exit status: 0 success, 1 analysis failure (including a failed --gate),
// 2 usage or configuration error, 3 I/O, parse or resource error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ksqrng/ksqrng.h"

namespace {

enum Exit : int { kOk = 0, kAnalysis = 1, kUsage = 2, kIo = 3 };

int exit_code(ksq_status s)
{
    switch (s) {
    case KSQ_OK:
        return kOk;
    case KSQ_ERR_INVALID_ARGUMENT:
    case KSQ_ERR_CONFIG:
        return kUsage;
    case KSQ_ERR_EXHAUSTED:
    case KSQ_ERR_ANALYSIS:
        return kAnalysis;
    case KSQ_ERR_IO:
    case KSQ_ERR_PARSE:
    case KSQ_ERR_RESOURCE:
    case KSQ_ERR_INTERNAL:
        break;
    }
    return kIo;
}

// Thrown to unwind a subcommand with a given exit status.
struct Failure {
    int code;
};

void check(ksq_status s, const char* what)
{
    if (s != KSQ_OK) {
        std::cerr << "ksqrng: " << what << ": " << ksq_last_error() << '\n';
        throw Failure{exit_code(s)};
    }
}

struct StringDeleter {
    void operator()(char* s) const { ksq_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

template <class T, void (*Free)(T*)>
struct HandleDeleter {
    void operator()(T* p) const { Free(p); }
};
using Config = std::unique_ptr<ksq_config, HandleDeleter<ksq_config, ksq_config_free>>;
using Trace = std::unique_ptr<ksq_trace, HandleDeleter<ksq_trace, ksq_trace_free>>;
using Bits = std::unique_ptr<ksq_bits, HandleDeleter<ksq_bits, ksq_bits_free>>;

// Writes to a sibling temporary then renames; "" or "-" means stdout.
void emit_report(const std::string& path, const char* text)
{
    if (path.empty() || path == "-") {
        std::fputs(text, stdout);
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << text;
        out.flush();
        if (!out) {
            std::cerr << "ksqrng: cannot write report " << path << '\n';
            throw Failure{kIo};
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        std::cerr << "ksqrng: cannot write report " << path << '\n';
        throw Failure{kIo};
    }
}

Config load_config(const std::string& path)
{
    ksq_config* raw = nullptr;
    if (path.empty()) {
        check(ksq_config_new(&raw), "configuration");
    } else {
        const ksq_status s = ksq_config_load(path.c_str(), &raw);
        if (s == KSQ_ERR_CONFIG) {
            std::cerr << "ksqrng: configuration " << path << ": key '" << ksq_last_error_key()
                      << "': " << ksq_last_error() << '\n';
            throw Failure{kUsage};
        }
        check(s, "configuration");
    }
    return Config(raw);
}

std::uint64_t config_u64(const Config& cfg, const char* key)
{
    std::uint64_t v = 0;
    check(ksq_config_get_u64(cfg.get(), key, &v), "configuration");
    return v;
}

struct Options {
    std::string config, in, out, report;
    bool ideal = false;
    bool gate = false;
    unsigned workers = 1;
    std::optional<std::uint64_t> bucket, limit;
    std::optional<std::uint32_t> witnesses;
};

int cmd_generate(const Options& o)
{
    Config cfg = load_config(o.config);
    if (o.ideal) {
        check(ksq_config_set(cfg.get(), "ideal", "true"), "--ideal");
    }
    ksq_trace* raw = nullptr;
    char* report = nullptr;
    check(ksq_generate(cfg.get(), o.workers, &raw, &report), "generate");
    Trace trace(raw);
    OwnedString text(report);
    check(ksq_trace_write(trace.get(), o.out.c_str()), "write trace");
    emit_report(o.report, text.get());
    return kOk;
}

Trace read_trace(const std::string& path)
{
    ksq_trace* raw = nullptr;
    check(ksq_trace_read(path.c_str(), &raw), ("read " + path).c_str());
    return Trace(raw);
}

Bits read_bits(const std::string& path)
{
    ksq_bits* raw = nullptr;
    check(ksq_bits_read(path.c_str(), &raw), ("read " + path).c_str());
    return Bits(raw);
}

int cmd_certify(const Options& o)
{
    Trace trace = read_trace(o.in);
    char* report = nullptr;
    check(ksq_certify(trace.get(), &report), "certify");
    OwnedString text(report);
    emit_report(o.report, text.get());
    return kOk;
}

int cmd_extract(const Options& o)
{
    Trace trace = read_trace(o.in);
    ksq_bits* raw = nullptr;
    char* report = nullptr;
    check(ksq_extract(trace.get(), &raw, &report), "extract");
    Bits bits(raw);
    OwnedString text(report);
    check(ksq_bits_write(bits.get(), o.out.c_str()), "write bits");
    emit_report(o.report, text.get());
    return kOk;
}

int cmd_stats(const Options& o)
{
    Config cfg = load_config(o.config);
    const std::uint64_t bucket = o.bucket.value_or(config_u64(cfg, "bucket_size"));
    if (bucket < 1) {
        std::cerr << "ksqrng: --bucket must be at least 1\n";
        return kUsage;
    }
    Bits bits = read_bits(o.in);
    char* report = nullptr;
    unsigned passed = 0, applicable = 0;
    check(ksq_stats(bits.get(), bucket, &report, &passed, &applicable), "stats");
    OwnedString text(report);
    emit_report(o.report, text.get());
    // At most one applicable test may fail at alpha = 0.01.
    if (o.gate && (applicable == 0 || applicable - passed > 1)) {
        std::cerr << "ksqrng: statistical gate failed: " << passed << " of " << applicable
                  << " applicable tests passed\n";
        return kAnalysis;
    }
    return kOk;
}

int cmd_consume(const Options& o)
{
    Config cfg = load_config(o.config);
    const std::uint64_t limit = o.limit.value_or(config_u64(cfg, "ss_limit"));
    const auto witnesses = static_cast<std::uint32_t>(
        o.witnesses.value_or(static_cast<std::uint32_t>(config_u64(cfg, "ss_witnesses"))));
    if (limit < 3 || witnesses < 1) {
        std::cerr << "ksqrng: --limit must be >= 3 and --witnesses >= 1\n";
        return kUsage;
    }
    Bits bits = read_bits(o.in);
    char* report = nullptr;
    std::uint64_t non_composite = 0;
    check(ksq_consume_ss(bits.get(), limit, witnesses, &report, &non_composite), "consume-ss");
    OwnedString text(report);
    emit_report(o.report, text.get());
    if (o.gate && non_composite > 0) {
        std::cerr << "ksqrng: " << non_composite << " Carmichael number(s) not declared composite\n";
        return kAnalysis;
    }
    return kOk;
}

} // namespace

int run_cli(int argc, char** argv)
{
    CLI::App app{"Kochen-Specker certified QRNG simulator and randomness toolkit", "ksqrng"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("generate", "Simulate the protocol and write a trace file");
    gen->add_option("--config", o.config, "key = value configuration file");
    gen->add_option("--out", o.out, "Output trace file")->required();
    gen->add_option("--report", o.report, "Generation report (default stdout)");
    gen->add_flag("--ideal", o.ideal, "Bypass every noise source");
    gen->add_option("--workers", o.workers, "Worker threads (0 = all cores)");

    auto* cert = app.add_subcommand("certify", "Certification report for a trace");
    cert->add_option("--in", o.in, "Input trace file")->required();
    cert->add_option("--report", o.report, "Report file (default stdout)");

    auto* ext = app.add_subcommand("extract", "Drop discards and debias a trace into a bit file");
    ext->add_option("--in", o.in, "Input trace file")->required();
    ext->add_option("--out", o.out, "Output bit file")->required();
    ext->add_option("--report", o.report, "Yield report (default stdout)");

    auto* st = app.add_subcommand("stats", "Entropy, NIST subset and bucket analysis of a bit file");
    st->add_option("--config", o.config, "Configuration file supplying bucket_size");
    st->add_option("--in", o.in, "Input bit file")->required();
    st->add_option("--bucket", o.bucket, "Bucket size in bits (default 999302)");
    st->add_option("--report", o.report, "Report file (default stdout)");
    st->add_flag("--gate", o.gate, "Exit 1 if more than one applicable test fails");

    auto* ss = app.add_subcommand("consume-ss", "Solovay-Strassen on Carmichael numbers from a bit file");
    ss->add_option("--config", o.config, "Configuration file supplying ss_limit, ss_witnesses");
    ss->add_option("--in", o.in, "Input bit file")->required();
    ss->add_option("--limit", o.limit, "Test Carmichael numbers below this bound (default 100000)");
    ss->add_option("--witnesses", o.witnesses, "Witnesses per number (default 64)");
    ss->add_option("--report", o.report, "Report file (default stdout)");
    ss->add_flag("--gate", o.gate, "Exit 1 unless every number is declared composite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (gen->parsed()) {
            return cmd_generate(o);
        }
        if (cert->parsed()) {
            return cmd_certify(o);
        }
        if (ext->parsed()) {
            return cmd_extract(o);
        }
        if (st->parsed()) {
            return cmd_stats(o);
        }
        return cmd_consume(o);
    } catch (const Failure& f) {
        return f.code;
    }
}

int main(int argc, char** argv)
{
    return run_cli(argc, argv);
}
