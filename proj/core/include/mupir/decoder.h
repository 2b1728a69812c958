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

#ifndef MUPIR_DECODER_H_
#define MUPIR_DECODER_H_

#include <map>
#include <optional>
#include <vector>

#include "mupir/answer.h"
#include "mupir/block.h"
#include "mupir/query.h"

namespace mupir {

// omega_file(x) = W_{file, subfile_a}^x + W_{file, subfile_b}^x, tied to the
// slot whose QSet2 call transmitted it.
struct OmegaVar {
  int slot = 0;
  int file = 0;
  int subsub = 0;
  int subfile_a = 0;
  int subfile_b = 0;

  friend auto operator<=>(const OmegaVar&, const OmegaVar&) = default;
};

// Per slot running QSet2: file i -> (subfile_a, subfile_b), index i-1.
using OmegaPairs = std::vector<std::pair<int, int>>;

// A cache line W_{1,j}^t + ... + W_{N,j}^t.
struct CacheLine {
  int subfile = 0;
  int t = 0;
  Block value;
};

enum class StepKind {
  kQueryAtom,     // answer minus known atoms yields one atom
  kQueryDiff,     // two answers whose atom sets differ by one atom
  kQueryOmega,    // QSet2 answer minus known omegas yields one omega
  kCacheCombine,  // cache line minus N-1 known atoms
  kPairSplit,     // known omega minus one known atom
  kOmegaJoin,     // two known atoms give their omega
};

const char* StepKindName(StepKind kind);

struct DecodeStep {
  StepKind kind = StepKind::kQueryAtom;
  int db = 0;        // 1-based database, query steps only
  int position = 0;  // 0-based index into per_db[db-1], query steps only
  int ref_db = 0;        // kQueryDiff: the answer subtracted
  int ref_position = 0;  // kQueryDiff
  int cache_t = 0;   // cache steps only
  Atom target;       // atom steps
  OmegaVar omega;    // omega steps, and the source of kPairSplit

  friend bool operator==(const DecodeStep&, const DecodeStep&) = default;
};

struct DecodePlan {
  int user = 0;
  int file = 0;
  std::vector<DecodeStep> steps;

  friend bool operator==(const DecodePlan&, const DecodePlan&) = default;
};

// Everything a user knows symbolically: the bundle, which slots ran QSet2
// (and with which pairs), and the user's own cache lines.
struct DecodeContext {
  const QueryBundle* bundle = nullptr;
  std::map<int, OmegaPairs> omega_slots;
  int N = 0;
  int subpacketization = 0;
  int cache_subfile = 0;      // 0 when the user has no cache
  int cache_first_t = 0;      // lines t = cache_first_t .. subpacketization
};

// Symbolic peeling: resolves every atom reachable by equations with a single
// unknown, treating omega-block answers as equations over omega values. A
// query whose atoms are another query's atoms plus one more yields that atom
// directly, which is how side information held only as a sum gets used. Throws
// kUnresolvable unless every atom of `file` over `subfiles` is reached.
DecodePlan BuildDecodePlan(const DecodeContext& context, int user, int file,
                           int subfiles);

// Runs a plan against real answers and cache content. Returns the blocks of
// `file`, subfile-major. Throws kUnresolvable when a step's inputs are absent.
std::vector<Block> ExecutePlan(const DecodePlan& plan,
                               const DecodeContext& context,
                               const AnswerSet& answers,
                               const std::vector<CacheLine>& cache,
                               int subfiles);

// A linear equation over atoms: XOR of atoms equals value.
struct XorEquation {
  std::vector<Atom> atoms;
  Block value;
};

struct Gf2Result {
  bool consistent = true;
  std::vector<std::optional<Block>> values;  // aligned with the targets
  bool AllDetermined() const;
};

// Gaussian elimination over GF(2) with block payloads; independent of the
// peeling route. A target is determined when its column is a pivot whose row
// has no free columns.
Gf2Result Gf2Solve(const std::vector<XorEquation>& equations,
                   const std::vector<Atom>& targets);

// The equations a user holds: every answer expanded into atoms, plus cache.
std::vector<XorEquation> CollectEquations(const QueryBundle& bundle,
                                          const AnswerSet& answers,
                                          const std::vector<CacheLine>& cache,
                                          int N);

}  // namespace mupir

#endif  // MUPIR_DECODER_H_
