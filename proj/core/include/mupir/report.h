// Copyright 2026 The mupir Authors
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

#ifndef MUPIR_REPORT_H_
#define MUPIR_REPORT_H_

#include <string>
#include <vector>

#include "mupir/audit.h"
#include "mupir/harness.h"
#include "mupir/scheme_params.h"

namespace mupir {

// Serializers. Output is a pure function of the input; exact rationals are
// written as "num/den" next to a fixed-point decimal.

std::string SessionReportJson(const SessionReport& report);
std::string SessionReportCsv(const SessionReport& report);

inline constexpr const char* kSweepCsvHeader =
    "S,N,K,q,H,M_exact,M_dec,R_exact,R_dec,RPD_dec,margin_dec,lemma41,lemma43";

std::string SweepCsv(const std::vector<SweepRow>& rows);
std::string SweepJson(const std::vector<SweepRow>& rows);

// One triple: the sweep row plus PIR rate and per-t chord margins.
std::string RatesJson(const SweepRow& row, const DominanceReport& dominance);

std::string AuditJson(const AuditReport& report, const Rational& rate,
                      const Rational& expected_rate);
std::string OracleJson(const DistributionVerdict& verdict);

}  // namespace mupir

#endif  // MUPIR_REPORT_H_
