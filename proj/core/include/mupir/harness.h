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

#ifndef MUPIR_HARNESS_H_
#define MUPIR_HARNESS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mupir/audit.h"
#include "mupir/demand.h"
#include "mupir/rational.h"
#include "mupir/transcript.h"

namespace mupir {

// Session configuration. Plain-text form, one `key = value` per line, '#'
// starts a comment:
//
//   scheme = mupir        # single | mupir
//   S = 3
//   N = 3
//   K = 5                 # forced to 1 for single
//   block_bytes = 4       # default 1
//   seed = 42             # default 0
//   demand = 2,3,2,1,3    # or random-valid (default); single takes one value
//   input = files.bin     # optional raw import, N files back to back
struct SessionConfig {
  Scheme scheme = Scheme::kSingle;
  int S = 0;
  int N = 0;
  int K = 1;
  int block_bytes = 1;
  uint64_t seed = 0;
  std::optional<DemandVector> demand;  // nullopt: random-valid
  std::string input_path;

  // Line of each key in the source text, for diagnostics.
  std::map<std::string, int> lines;
  std::string source = "<config>";
};

// Throws kConfig with "source:line: field 'key': reason" diagnostics.
SessionConfig ParseConfig(std::string_view text,
                          std::string_view source = "<config>");
SessionConfig LoadConfig(const std::string& path);

// Field-level checks that need more than one key (ranges, regime, demand
// shape). Throws kConfig pointing at the offending field's line.
void ValidateConfig(const SessionConfig& config);

// Accepts "2,1,3", "(2,1,3)" or "2 1 3". Throws kConfig.
DemandVector ParseDemand(std::string_view text);

struct SessionReport {
  Scheme scheme = Scheme::kSingle;
  int S = 0;
  int N = 0;
  int K = 0;
  int block_bytes = 0;
  uint64_t seed = 0;
  DemandVector demand;
  std::vector<size_t> per_db_query_counts;
  size_t total_queries = 0;
  Rational rate;           // measured
  Rational expected_rate;  // closed form
  bool decode_ok = false;
  bool oracle_agrees = false;
  bool audit_ok = false;
  bool cache_budget_ok = true;
  std::string audit_failure;
  std::string decode_failure;
  uint64_t file_bytes = 0;
  uint64_t download_bytes = 0;
  uint64_t cache_bytes_per_user = 0;  // 0 for single
};

// Builds the store, runs placement (multi-user), generates, answers, decodes
// every user against the store and audits the bundle. Decode and audit
// problems are reported, not thrown; invalid configurations throw.
SessionReport RunSession(const SessionConfig& config);

// 0 success, 3 decode failure, 4 audit failure.
int ExitCodeFor(const SessionReport& report);

// ---------------------------------------------------------------------------
// Rates and sweeps

struct SweepRow {
  int S = 0;
  int N = 0;
  int K = 0;
  BigInt q;
  BigInt H;
  Rational M;
  Rational rate;
  Rational pd_rate;
  Rational margin;  // pd_rate - rate
  bool lemma41 = false;  // N S^(N-1) - q > 0
  bool lemma43 = false;  // margin > 0
  bool chords = false;   // strictly below every chord
};

SweepRow ComputeRow(int S, int N, int K);

struct SweepSpec {
  int s_min = 2;
  int s_max = 6;
  int n_min = 2;
  int n_max = 6;
  int k_max = 8;  // K runs over N..k_max
};

// Rows ordered by S, then N, then K.
std::vector<SweepRow> Sweep(const SweepSpec& spec);

// Parses the CSV written by SweepCsv (exact columns only matter) and checks
// each row against a fresh computation. Throws kConfig on malformed input.
std::vector<SweepRow> ParseSweepCsv(std::string_view text);
bool VerifyRow(const SweepRow& row);

}  // namespace mupir

#endif  // MUPIR_HARNESS_H_
