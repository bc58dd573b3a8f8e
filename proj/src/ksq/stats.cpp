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

#include "ksq/stats.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

#include "ksq/error.hpp"

namespace ksq {
namespace {

// Regularized upper incomplete gamma Q(a, x).
double igamc(double a, double x)
{
    if (x <= 0.0) {
        return 1.0;
    }
    return boost::math::gamma_q(a, x);
}

TestResult finish(TestResult r)
{
    r.applicable = true;
    r.p_value = std::clamp(r.p_value, 0.0, 1.0);
    r.passed = r.p_value >= kAlpha;
    return r;
}

TestResult not_applicable(std::string name, std::string why)
{
    TestResult r;
    r.name = std::move(name);
    r.note = std::move(why);
    return r;
}

void require_nonempty(const BitStream& bits)
{
    if (bits.empty()) {
        throw ValidationError("statistical test on an empty sequence");
    }
}

struct LongestRunTable {
    std::uint64_t block_len;
    unsigned min_class; // runs <= min_class pool into class 0
    std::vector<double> probs;
};

const LongestRunTable& longest_run_table(std::uint64_t n)
{
    static const LongestRunTable small{8, 1, {0.2148, 0.3672, 0.2305, 0.1875}};
    static const LongestRunTable medium{128, 4, {0.1174, 0.2430, 0.2493, 0.1752, 0.1027, 0.1124}};
    static const LongestRunTable large{
        10000, 10, {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727}};
    if (n < 6272) {
        return small;
    }
    return n < 750000 ? medium : large;
}

} // namespace

double entropy_per_byte(const BitStream& bits)
{
    if (bits.size() < 8) {
        throw ValidationError("entropy needs at least 8 bits");
    }
    const std::uint64_t n_bytes = bits.size() / 8;
    std::array<std::uint64_t, 256> hist{};
    for (std::uint64_t k = 0; k < n_bytes; ++k) {
        ++hist[bits.byte(k)];
    }
    double h = 0.0;
    for (auto c : hist) {
        if (c > 0) {
            const double f = static_cast<double>(c) / static_cast<double>(n_bytes);
            h -= f * std::log2(f);
        }
    }
    return h + 0.0;
}

TestResult monobit_test(const BitStream& bits)
{
    require_nonempty(bits);
    const double n = static_cast<double>(bits.size());
    const double sum = 2.0 * static_cast<double>(bits.count_ones()) - n;
    TestResult r;
    r.name = "frequency";
    r.statistic = std::abs(sum) / std::sqrt(n);
    r.p_value = std::erfc(r.statistic / std::numbers::sqrt2);
    return finish(r);
}

TestResult block_frequency_test(const BitStream& bits, std::uint64_t block_len)
{
    require_nonempty(bits);
    if (block_len == 0 || block_len > bits.size()) {
        throw ValidationError("block length must be in [1, n]");
    }
    const std::uint64_t n_blocks = bits.size() / block_len;
    const double m = static_cast<double>(block_len);
    double chi2 = 0.0;
    for (std::uint64_t b = 0; b < n_blocks; ++b) {
        const double pi = static_cast<double>(bits.count_ones(b * block_len, (b + 1) * block_len)) / m;
        chi2 += (pi - 0.5) * (pi - 0.5);
    }
    chi2 *= 4.0 * m;
    TestResult r;
    r.name = "block_frequency";
    r.statistic = chi2;
    r.p_value = igamc(static_cast<double>(n_blocks) / 2.0, chi2 / 2.0);
    return finish(r);
}

TestResult runs_test(const BitStream& bits)
{
    require_nonempty(bits);
    const std::uint64_t len = bits.size();
    const double n = static_cast<double>(len);
    const double pi = static_cast<double>(bits.count_ones()) / n;
    TestResult r;
    r.name = "runs";
    if (std::abs(pi - 0.5) >= 2.0 / std::sqrt(n)) {
        // Frequency prerequisite failed; the runs statistic is not computed.
        r.p_value = 0.0;
        r.note = "frequency prerequisite failed";
        return finish(r);
    }
    std::uint64_t runs = 1;
    for (std::uint64_t i = 0; i + 1 < len; ++i) {
        runs += bits[i] != bits[i + 1];
    }
    const double v = static_cast<double>(runs);
    r.statistic = v;
    r.p_value = std::erfc(std::abs(v - 2.0 * n * pi * (1.0 - pi))
                          / (2.0 * std::sqrt(2.0 * n) * pi * (1.0 - pi)));
    return finish(r);
}

TestResult longest_run_test(const BitStream& bits)
{
    if (bits.size() < 128) {
        throw ValidationError("longest-run test needs at least 128 bits");
    }
    const LongestRunTable& t = longest_run_table(bits.size());
    const std::uint64_t n_blocks = bits.size() / t.block_len;
    const std::size_t k_classes = t.probs.size();
    std::vector<std::uint64_t> freq(k_classes, 0);
    for (std::uint64_t b = 0; b < n_blocks; ++b) {
        std::uint64_t longest = 0, current = 0;
        for (std::uint64_t i = b * t.block_len; i < (b + 1) * t.block_len; ++i) {
            current = bits[i] ? current + 1 : 0;
            longest = std::max(longest, current);
        }
        const std::uint64_t lo = t.min_class;
        const std::uint64_t cls = longest <= lo ? 0 : std::min<std::uint64_t>(longest - lo, k_classes - 1);
        ++freq[cls];
    }
    double chi2 = 0.0;
    const double nb = static_cast<double>(n_blocks);
    for (std::size_t i = 0; i < k_classes; ++i) {
        const double expected = nb * t.probs[i];
        const double d = static_cast<double>(freq[i]) - expected;
        chi2 += d * d / expected;
    }
    TestResult r;
    r.name = "longest_run";
    r.statistic = chi2;
    r.p_value = igamc(static_cast<double>(k_classes - 1) / 2.0, chi2 / 2.0);
    return finish(r);
}

namespace {

// Sum over observed m-bit patterns (circular) of C log C, C = count / n.
double phi(const BitStream& bits, unsigned m)
{
    if (m == 0) {
        return 0.0;
    }
    const std::uint64_t n = bits.size();
    const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
    std::vector<std::uint64_t> counts(std::size_t{1} << m, 0);
    std::uint64_t window = 0;
    for (unsigned i = 0; i + 1 < m; ++i) {
        window = (window << 1) | bits[i % n];
    }
    for (std::uint64_t i = 0; i < n; ++i) {
        window = ((window << 1) | bits[(i + m - 1) % n]) & mask;
        ++counts[window];
    }
    double sum = 0.0;
    const double dn = static_cast<double>(n);
    for (auto c : counts) {
        if (c > 0) {
            const double f = static_cast<double>(c) / dn;
            sum += f * std::log(f);
        }
    }
    return sum;
}

} // namespace

TestResult approximate_entropy_test(const BitStream& bits, unsigned m)
{
    require_nonempty(bits);
    if (m < 1 || m > 24) {
        throw ValidationError("approximate entropy block length must be in [1, 24]");
    }
    const double ap_en = phi(bits, m) - phi(bits, m + 1);
    const double n = static_cast<double>(bits.size());
    TestResult r;
    r.name = "approximate_entropy";
    r.statistic = 2.0 * n * (std::numbers::ln2 - ap_en);
    r.p_value = igamc(std::ldexp(1.0, static_cast<int>(m) - 1), r.statistic / 2.0);
    return finish(r);
}

std::vector<TestResult> nist_subset(const BitStream& bits)
{
    const std::uint64_t n = bits.size();
    std::vector<TestResult> out;
    constexpr std::uint64_t kMin = 100;
    const std::string short_note = "sequence shorter than 100 bits";

    out.push_back(n >= kMin ? monobit_test(bits) : not_applicable("frequency", short_note));

    if (n >= kMin) {
        const std::uint64_t block = std::max<std::uint64_t>(20, n / 100 + 1);
        out.push_back(block_frequency_test(bits, block));
    } else {
        out.push_back(not_applicable("block_frequency", short_note));
    }

    out.push_back(n >= kMin ? runs_test(bits) : not_applicable("runs", short_note));

    out.push_back(n >= 128 ? longest_run_test(bits)
                           : not_applicable("longest_run", "sequence shorter than 128 bits"));

    // Largest m <= 10 with m < floor(log2 n) - 5.
    const int log2n = n > 0 ? static_cast<int>(std::bit_width(n)) - 1 : 0;
    const int m = std::min(10, log2n - 6);
    if (n >= kMin && m >= 2) {
        out.push_back(approximate_entropy_test(bits, static_cast<unsigned>(m)));
    } else {
        out.push_back(not_applicable("approximate_entropy", "sequence shorter than 256 bits"));
    }
    return out;
}

BucketAnalysis bucket_frequency(const BitStream& bits, std::uint64_t bucket_size)
{
    if (bucket_size == 0) {
        throw ValidationError("bucket size must be at least 1");
    }
    BucketAnalysis a;
    a.bucket_size = bucket_size;
    a.n_buckets = bits.size() / bucket_size;
    if (a.n_buckets == 0) {
        throw ValidationError("no complete bucket of " + std::to_string(bucket_size) + " bits");
    }
    std::vector<double> freq(a.n_buckets);
    const double b = static_cast<double>(bucket_size);
    for (std::uint64_t k = 0; k < a.n_buckets; ++k) {
        const auto ones = bits.count_ones(k * bucket_size, (k + 1) * bucket_size);
        freq[k] = (b - static_cast<double>(ones)) / b;
    }
    double sum = 0.0;
    for (double f : freq) {
        sum += f;
    }
    a.mean = sum / static_cast<double>(a.n_buckets);
    if (a.n_buckets > 1) {
        double ss = 0.0;
        for (double f : freq) {
            ss += (f - a.mean) * (f - a.mean);
        }
        a.stddev = std::sqrt(ss / static_cast<double>(a.n_buckets - 1));
    }
    return a;
}

StatsReport build_stats_report(const BitStream& bits, std::uint64_t bucket_size)
{
    StatsReport r;
    r.n_bits = bits.size();
    r.entropy_bits_per_byte = entropy_per_byte(bits);
    r.zero_fraction = 1.0 - static_cast<double>(bits.count_ones()) / static_cast<double>(bits.size());
    r.tests = nist_subset(bits);
    if (bucket_size > 0 && bits.size() >= bucket_size) {
        r.buckets = bucket_frequency(bits, bucket_size);
    }
    return r;
}

} // namespace ksq
