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

#include "ksq/certify.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "ksq/error.hpp"

namespace ksq {
namespace {

void require_probability(double p, const char* what)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError(std::string(what) + " must lie in [0, 1]");
    }
}

} // namespace

std::pair<double, double> certification_bounds() noexcept
{
    return {std::sqrt(5.0 / 14.0), 3.0 / std::sqrt(14.0)};
}

std::pair<double, double> estimate_overlaps(double p0, double p1)
{
    require_probability(p0, "p0");
    require_probability(p1, "p1");
    return {std::sqrt(p0), std::sqrt(p1)};
}

bool check_certified(double overlap) noexcept
{
    const auto [lo, hi] = certification_bounds();
    return overlap >= lo && overlap <= hi;
}

double certified_fraction_raw(double p0, double p1)
{
    require_probability(p0, "p0");
    require_probability(p1, "p1");
    if (!(p0 + p1 > 0.0) || p0 + p1 > 1.0 + 1e-12) {
        throw ValidationError("p0 + p1 must lie in (0, 1]");
    }
    const double frac = p0 / (p0 + p1);
    return std::clamp(1.0 - 2.0 * std::abs(frac - 0.5), 0.0, 1.0);
}

double certified_fraction_final(double c_raw)
{
    require_probability(c_raw, "certified fraction");
    const double u = 1.0 - c_raw;
    return 1.0 - u * u;
}

CertificationReport build_report(const SymbolCounts& counts)
{
    const std::uint64_t binary = counts.zero + counts.one;
    if (binary == 0) {
        throw ValidationError("stream has no binary outcomes to certify");
    }
    CertificationReport r;
    r.counts = counts;
    const double nb = static_cast<double>(binary);
    const double nt = static_cast<double>(counts.total());
    r.p0 = static_cast<double>(counts.zero) / nb;
    r.p1 = static_cast<double>(counts.one) / nb;
    r.se_p0 = r.se_p1 = std::sqrt(r.p0 * r.p1 / nb);
    r.p_discard = static_cast<double>(counts.discard) / nt;
    r.se_discard = std::sqrt(r.p_discard * (1.0 - r.p_discard) / nt);
    std::tie(r.overlap_plus, r.overlap_minus) = estimate_overlaps(r.p0, r.p1);
    std::tie(r.bound_lo, r.bound_hi) = certification_bounds();
    r.certified_plus = check_certified(r.overlap_plus);
    r.certified_minus = check_certified(r.overlap_minus);
    r.certified_fraction_raw = certified_fraction_raw(r.p0, r.p1);
    r.certified_fraction_final = certified_fraction_final(r.certified_fraction_raw);
    return r;
}

CertificationReport build_report(const RawStream& stream)
{
    return build_report(stream.counts());
}

} // namespace ksq
