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

#ifndef MUPIR_AUDIT_H_
#define MUPIR_AUDIT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mupir/demand.h"
#include "mupir/query.h"
#include "mupir/rational.h"
#include "mupir/rng.h"
#include "mupir/transcript.h"

namespace mupir {

// Multiplicity of one k-subset of files inside one generator block.
struct TypeCell {
  int slot = 0;
  int db = 0;
  int level = 0;
  std::vector<int> type;
  int64_t count = 0;
  int64_t expected = 0;
};

// References to one file inside one generator block. For omega blocks a
// reference is one omega term (two atoms).
struct FileRefCount {
  int slot = 0;
  int db = 0;
  int file = 0;
  int64_t count = 0;
  int64_t expected = 0;
};

// How often each exposed subsubfile of a file is referenced within one block,
// as a sorted list of counts. Informational: it is compared across files but
// does not enter the verdict.
struct RepetitionProfile {
  int slot = 0;
  int db = 0;
  int file = 0;
  std::vector<int> counts;
};

struct AuditReport {
  std::vector<TypeCell> cells;
  std::vector<FileRefCount> file_refs;
  std::vector<RepetitionProfile> profiles;
  size_t total_queries = 0;
  bool profiles_symmetric = true;
  bool ok = true;
  std::string first_failure;  // empty when ok
};

// Checks every generator block of the bundle (grouped by provenance slot and
// generator) against its expected multiplicities: phi for kAlg1, psi for
// kQSet1, k*phi for kQSet2, plus per-file reference totals, atom well-formedness
// and, for kAlg1, that no subsubfile repeats within a database.
AuditReport CheckStructure(const QueryBundle& bundle, int S, int N);

// Same, but treats the whole bundle as a single block of `mode`, ignoring
// provenance. Useful for hand-built bundles.
AuditReport CheckStructure(const QueryBundle& bundle, int S, int N,
                           Generator mode);

// Downloaded blocks over blocks per file: |bundle| / (K S^(N-1)).
Rational CountRate(const QueryBundle& bundle, int S, int N, int K);

// ---------------------------------------------------------------------------
// Exhaustive distribution oracle

using KeyDistribution = std::map<DbKey, Rational>;

enum class BasePolicy {
  kAllBaseSets,  // every covering base set and every valid rho, uniformly
  kLowestBase,   // lowest-index user per file, rho uniform among valid maps
};

struct DistributionVerdict {
  Scheme scheme = Scheme::kSingle;
  int S = 0;
  int N = 0;
  int K = 0;
  BasePolicy policy = BasePolicy::kAllBaseSets;
  uint64_t assignments = 0;  // randomness assignments enumerated
  std::vector<DemandVector> demands;
  // [demand index][db-1]
  std::vector<std::vector<KeyDistribution>> distributions;
  bool equal = false;
  std::string first_difference;  // empty when equal
};

inline constexpr uint64_t kOracleLimit = 10'000'000;

// Enumerates all randomness of the scheme (user permutation P, per-slot
// subsubfile permutations with the required tails fixed, and base/rho
// choices under `policy`) and compares the exact per-database distributions
// of canonical query keys across all valid demand vectors. The single-user
// scheme ignores K and policy. Throws kTooLarge above kOracleLimit
// assignments and kUnsupportedRegime outside the scheme's regime.
DistributionVerdict DemandDistributionOracle(
    int S, int N, int K, Scheme scheme,
    BasePolicy policy = BasePolicy::kAllBaseSets);

// ---------------------------------------------------------------------------
// Mutations

enum class MutationKind { kDrop, kDuplicate, kRetarget };

const char* MutationKindName(MutationKind kind);

struct Mutation {
  MutationKind kind = MutationKind::kDrop;
  int db = 0;        // 1-based
  int position = 0;  // 0-based
  int atom = 0;      // kRetarget: index of the atom (first of its pair)
  int new_file = 0;  // kRetarget
};

// Uniform over kinds, databases with queries, positions and (for retarget)
// atoms and replacement files. Omega pairs are retargeted together.
Mutation RandomMutation(const QueryBundle& bundle, int N, Rng& rng);

QueryBundle ApplyMutation(const QueryBundle& bundle, const Mutation& m);

}  // namespace mupir

#endif  // MUPIR_AUDIT_H_
