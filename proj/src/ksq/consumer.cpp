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

#include "ksq/consumer.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "ksq/error.hpp"

namespace ksq {

bool BitCursor::take(unsigned width, std::uint64_t& value) noexcept
{
    if (width > 64 || remaining() < width) {
        return false;
    }
    std::uint64_t v = 0;
    for (unsigned i = 0; i < width; ++i) {
        v = (v << 1) | static_cast<std::uint64_t>((*bits_)[pos_ + i]);
    }
    pos_ += width;
    value = v;
    return true;
}

int jacobi_unsigned(std::uint64_t a, std::uint64_t n) noexcept
{
    a %= n;
    int result = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            const std::uint64_t r = n & 7;
            if (r == 3 || r == 5) {
                result = -result;
            }
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) {
            result = -result;
        }
        a %= n;
    }
    return n == 1 ? result : 0;
}

int jacobi(std::int64_t a, std::int64_t n)
{
    if (n < 1 || n % 2 == 0) {
        throw ValidationError("Jacobi symbol needs an odd positive modulus, got " + std::to_string(n));
    }
    const auto un = static_cast<std::uint64_t>(n);
    std::int64_t r = a % n;
    if (r < 0) {
        r += n;
    }
    return jacobi_unsigned(static_cast<std::uint64_t>(r), un);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept
{
    if (m == 1) {
        return 0;
    }
    __extension__ typedef unsigned __int128 u128;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) {
            result = static_cast<std::uint64_t>(static_cast<u128>(result) * base % m);
        }
        base = static_cast<std::uint64_t>(static_cast<u128>(base) * base % m);
        exp >>= 1;
    }
    return result;
}

SSVerdict solovay_strassen(std::uint64_t n, BitCursor& bits, unsigned max_witnesses)
{
    if (n < 3) {
        throw ValidationError("Solovay-Strassen needs n >= 3");
    }
    if (max_witnesses < 1) {
        throw ValidationError("at least one witness is required");
    }
    SSVerdict v;
    v.number = n;
    if (n % 2 == 0) {
        v.verdict = SSResult::kComposite;
        return v;
    }
    if (n == 3) {
        return v;
    }
    const std::uint64_t span = n - 3;
    const auto width = static_cast<unsigned>(std::bit_width(span));
    const std::uint64_t exponent = (n - 1) / 2;
    while (v.witnesses_used < max_witnesses) {
        std::uint64_t chunk = 0;
        if (!bits.take(width, chunk)) {
            throw BitSourceExhausted("bit source exhausted while testing " + std::to_string(n), v);
        }
        v.bits_consumed += width;
        if (chunk >= span) {
            continue;
        }
        const std::uint64_t a = 2 + chunk;
        ++v.witnesses_used;
        if (std::gcd(a, n) != 1) {
            v.verdict = SSResult::kComposite;
            return v;
        }
        const int j = jacobi_unsigned(a, n);
        const std::uint64_t expected = j == 1 ? 1 : n - 1;
        if (mod_pow(a, exponent, n) != expected) {
            v.verdict = SSResult::kComposite;
            return v;
        }
    }
    return v;
}

std::vector<std::uint64_t> carmichael_numbers(std::uint64_t limit)
{
    if (limit < 3) {
        throw ValidationError("Carmichael limit must be at least 3");
    }
    // Smallest-prime-factor sieve.
    std::vector<std::uint32_t> spf(limit, 0);
    for (std::uint64_t i = 2; i < limit; ++i) {
        if (spf[i] == 0) {
            for (std::uint64_t j = i; j < limit; j += i) {
                if (spf[j] == 0) {
                    spf[j] = static_cast<std::uint32_t>(i);
                }
            }
        }
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 3; n < limit; n += 2) {
        if (spf[n] == n) {
            continue;
        }
        bool korselt = true;
        std::uint64_t m = n;
        while (m > 1 && korselt) {
            const std::uint64_t p = spf[m];
            m /= p;
            if (m % p == 0 || (n - 1) % (p - 1) != 0) {
                korselt = false;
            }
        }
        if (korselt) {
            out.push_back(n);
        }
    }
    return out;
}

HarnessResult carmichael_harness(std::uint64_t limit, BitCursor& bits, unsigned max_witnesses)
{
    HarnessResult r;
    const auto numbers = carmichael_numbers(limit);
    for (std::size_t i = 0; i < numbers.size(); ++i) {
        try {
            r.verdicts.push_back(solovay_strassen(numbers[i], bits, max_witnesses));
        } catch (const BitSourceExhausted& e) {
            throw BitSourceExhausted(std::string(e.what()) + " (Carmichael number #"
                                         + std::to_string(i) + ")",
                                     e.partial(), i);
        }
        const SSVerdict& v = r.verdicts.back();
        r.total_bits += v.bits_consumed;
        r.total_witnesses += v.witnesses_used;
        r.composites += v.verdict == SSResult::kComposite;
    }
    return r;
}

} // namespace ksq
