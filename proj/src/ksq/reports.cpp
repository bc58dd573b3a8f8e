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

#include "ksq/reports.hpp"

#include <nlohmann/json.hpp>

namespace ksq {
namespace {

using Json = nlohmann::ordered_json;

Json header(const char* kind)
{
    Json j;
    j["report"] = kind;
    j["version"] = 1;
    return j;
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

Json counts_json(const SymbolCounts& c)
{
    Json j;
    j["zero"] = c.zero;
    j["one"] = c.one;
    j["discard"] = c.discard;
    return j;
}

} // namespace

std::string generation_report(const ProtocolConfig& config, const BatchSummary& summary)
{
    Json j = header("generation");
    j["trials"] = config.n_trials;
    j["seed"] = config.seed;
    j["ideal"] = config.ideal;
    const NoiseParams& n = config.noise;
    Json noise;
    noise["p_thermal_1"] = n.p_thermal_1;
    noise["p_thermal_2"] = n.p_thermal_2;
    noise["gate_amp_error"] = n.gate_amp_error;
    noise["p_decay_10"] = n.p_decay_10;
    noise["p_decay_21"] = n.p_decay_21;
    Json centers = Json::array();
    for (const auto& c : n.iq_centers) {
        centers.push_back(Json::array({c.i, c.q}));
    }
    noise["iq_centers"] = centers;
    noise["iq_sigma"] = n.iq_sigma;
    j["noise"] = noise;
    j["counts"] = counts_json(summary.counts);
    j["p0"] = summary.p0;
    j["p1"] = summary.p1;
    j["p_discard"] = summary.p_discard;
    j["se_p0"] = summary.se_p0;
    j["se_p1"] = summary.se_p1;
    j["se_discard"] = summary.se_discard;
    return dump(j);
}

std::string certification_report(const CertificationReport& r)
{
    Json j = header("certification");
    j["counts"] = counts_json(r.counts);
    j["p0"] = r.p0;
    j["se_p0"] = r.se_p0;
    j["p1"] = r.p1;
    j["se_p1"] = r.se_p1;
    j["p_discard"] = r.p_discard;
    j["se_discard"] = r.se_discard;
    j["overlap_plus"] = r.overlap_plus;
    j["overlap_minus"] = r.overlap_minus;
    j["bound_lo"] = r.bound_lo;
    j["bound_hi"] = r.bound_hi;
    j["certified_plus"] = r.certified_plus;
    j["certified_minus"] = r.certified_minus;
    j["certified_fraction_raw"] = r.certified_fraction_raw;
    j["certified_fraction_final"] = r.certified_fraction_final;
    return dump(j);
}

std::string extraction_report(const ExtractionReport& r)
{
    Json j = header("extraction");
    j["input_bits"] = r.input_bits;
    j["pairs"] = r.pairs;
    j["output_bits"] = r.output_bits;
    j["trailing_dropped"] = r.trailing_dropped;
    j["input_p0"] = r.input_p0;
    j["realized_yield"] = r.realized_yield;
    j["expected_yield"] = r.expected_yield;
    return dump(j);
}

std::string stats_report(const StatsReport& r)
{
    Json j = header("stats");
    j["n_bits"] = r.n_bits;
    j["zero_fraction"] = r.zero_fraction;
    j["entropy_bits_per_byte"] = r.entropy_bits_per_byte;
    j["alpha"] = kAlpha;
    Json tests = Json::array();
    for (const auto& t : r.tests) {
        Json e;
        e["name"] = t.name;
        e["applicable"] = t.applicable;
        if (t.applicable) {
            e["statistic"] = t.statistic;
            e["p_value"] = t.p_value;
            e["passed"] = t.passed;
        }
        if (!t.note.empty()) {
            e["note"] = t.note;
        }
        tests.push_back(e);
    }
    j["tests"] = tests;
    if (r.buckets) {
        Json b;
        b["bucket_size"] = r.buckets->bucket_size;
        b["n_buckets"] = r.buckets->n_buckets;
        b["mean"] = r.buckets->mean;
        b["stddev"] = r.buckets->stddev;
        j["buckets"] = b;
    } else {
        j["buckets"] = nullptr;
    }
    return dump(j);
}

std::string consumer_report(std::uint64_t limit, unsigned max_witnesses, const HarnessResult& result)
{
    Json j = header("solovay_strassen");
    j["limit"] = limit;
    j["max_witnesses"] = max_witnesses;
    j["numbers_tested"] = result.verdicts.size();
    j["composites"] = result.composites;
    j["total_bits"] = result.total_bits;
    j["total_witnesses"] = result.total_witnesses;
    Json verdicts = Json::array();
    for (const auto& v : result.verdicts) {
        Json e;
        e["number"] = v.number;
        e["verdict"] = v.verdict == SSResult::kComposite ? "composite" : "probably_prime";
        e["witnesses_used"] = v.witnesses_used;
        e["bits_consumed"] = v.bits_consumed;
        verdicts.push_back(e);
    }
    j["verdicts"] = verdicts;
    return dump(j);
}

} // namespace ksq
