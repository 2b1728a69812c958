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

#ifndef MUPIR_SINGLE_USER_PIR_H_
#define MUPIR_SINGLE_USER_PIR_H_

#include <span>
#include <vector>

#include "mupir/answer.h"
#include "mupir/permutation.h"
#include "mupir/query.h"
#include "mupir/transcript.h"

namespace mupir {

// Per-database query lists in generation order, before emission shuffling.
// Atom subfile is always 1.
struct GeneratedLists {
  std::vector<std::vector<Query>> per_db;
  std::vector<std::vector<int>> level;  // k of each query
};

// Single-user generator with subpacketization S^(N-1). perms[i-1] permutes the
// subsubfiles of file i. Throws kInvalidDemand, kInvalidDimension.
GeneratedLists RunAlg1(int S, int N, std::span<const Permutation> perms, int d);

struct SingleSession {
  QueryBundle bundle;
  SessionTranscript transcript;
};

// RunAlg1 plus seeded per-database emission shuffling (no shuffle when
// emission_rng is null) and the user's decode plan.
SingleSession GenerateAlg1(int S, int N, std::span<const Permutation> perms,
                           int d, Rng* emission_rng);

// Draws N uniform permutations and runs GenerateAlg1.
SingleSession NewSingleSession(int S, int N, int d, uint64_t seed);

QueryBundle ReplaySingleBundle(const SessionTranscript& transcript);

struct SingleDecodeResult {
  std::vector<Block> file;  // S^(N-1) blocks of W_d
  bool oracle_agrees = false;
  bool oracle_consistent = false;
};

// Executes the peeling plan and cross-checks it against Gf2Solve. Throws
// kUnresolvable if either route fails to recover the file or they disagree.
SingleDecodeResult DecodeSingle(const AnswerSet& answers,
                                const QueryBundle& bundle,
                                const SessionTranscript& transcript);

}  // namespace mupir

#endif  // MUPIR_SINGLE_USER_PIR_H_
