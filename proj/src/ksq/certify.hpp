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

#include <utility>

#include "ksq/protocol.hpp"

namespace ksq {

//---------------------------------------------------------------------------//
/*!
 * Kochen-Specker value-indefiniteness certification.
 *
 * An outcome whose projector |psi> has overlap |<psi|phi>| with the prepared
 * state |phi> in [sqrt(5/14), 3/sqrt(14)] is certified value-indefinite. With
 * |phi> = |Sz=0> and |psi+-> = |Sx=+-1>, the overlaps are estimated as the
 * square roots of the observed outcome frequencies.
 */
struct CertificationReport {
    SymbolCounts counts;
    // Conditioned on binary (non-discard) outcomes.
    double p0 = 0.0, p1 = 0.0;
    double se_p0 = 0.0, se_p1 = 0.0;
    // Fraction of all trials.
    double p_discard = 0.0, se_discard = 0.0;
    double overlap_plus = 0.0;  // sqrt(p0), outcome "0" / Sx = +1
    double overlap_minus = 0.0; // sqrt(p1), outcome "1" / Sx = -1
    double bound_lo = 0.0, bound_hi = 0.0;
    bool certified_plus = false;
    bool certified_minus = false;
    double certified_fraction_raw = 0.0;
    double certified_fraction_final = 0.0;
};

// (sqrt(5/14), 3/sqrt(14)).
std::pair<double, double> certification_bounds() noexcept;

std::pair<double, double> estimate_overlaps(double p0, double p1);

// Closed interval test against certification_bounds().
bool check_certified(double overlap) noexcept;

// Conservative model: every deviation from 1/2 comes from uncertified runs
// that emit the majority bit deterministically, so 1 - 2|p0/(p0+p1) - 1/2|.
double certified_fraction_raw(double p0, double p1);

// A von Neumann output bit is uncertified only if both of its raw bits are:
// 1 - (1 - c_raw)^2.
double certified_fraction_final(double c_raw);

CertificationReport build_report(const SymbolCounts& counts);
CertificationReport build_report(const RawStream& stream);

} // namespace ksq
