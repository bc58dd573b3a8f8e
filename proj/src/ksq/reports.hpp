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

#include <string>

#include "ksq/certify.hpp"
#include "ksq/consumer.hpp"
#include "ksq/extract.hpp"
#include "ksq/protocol.hpp"
#include "ksq/stats.hpp"

namespace ksq {

// Reports are pretty-printed JSON objects with a fixed key order, starting
// with "report": <kind> and "version": 1, terminated by a newline. Output is
// a pure function of the arguments.
std::string generation_report(const ProtocolConfig& config, const BatchSummary& summary);
std::string certification_report(const CertificationReport& report);
std::string extraction_report(const ExtractionReport& report);
std::string stats_report(const StatsReport& report);
std::string consumer_report(std::uint64_t limit, unsigned max_witnesses, const HarnessResult& result);

} // namespace ksq
