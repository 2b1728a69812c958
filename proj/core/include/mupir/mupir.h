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

#ifndef MUPIR_MUPIR_H_
#define MUPIR_MUPIR_H_

#include <map>
#include <span>
#include <vector>

#include "mupir/answer.h"
#include "mupir/decoder.h"
#include "mupir/demand.h"
#include "mupir/file_store.h"
#include "mupir/permutation.h"
#include "mupir/single_user_pir.h"
#include "mupir/transcript.h"

namespace mupir {

// ---------------------------------------------------------------------------
// Placement

struct CacheContent {
  int owner = 0;
  int subfile = 0;  // p_owner
  std::vector<CacheLine> lines;  // t = H+1 .. S^(N-1)
};

struct PlacementResult {
  std::vector<CacheLine> broadcast;   // K (S^(N-1) - H) lines, subfile-major
  std::vector<CacheContent> caches;   // index user-1
};

// Broadcasts every XOR line W_{1,j}^t + ... + W_{N,j}^t for t > H and lets
// user u keep those with j = user_perm(u). Throws kUnsupportedRegime when
// N > K.
PlacementResult Placement(const FileStore& store, const Permutation& user_perm);

// ---------------------------------------------------------------------------
// Query generation

// QSet1 block for subfile slot j: per database, C(N,k) psi_s(S,k) k-sums over
// W_{.,j}. perms[d-1] must fix its tail after H. Throws kInfeasibleSwap if the
// fresh-index assignment cannot be completed.
GeneratedLists QSet1(int S, int N, int j, std::span<const Permutation> perms,
                     int d);

// QSet2 block: per database, C(N,k) k phi_s(S,k) k-sums of omega values, each
// omega expanded into its two atoms.
GeneratedLists QSet2(int S, int N, const OmegaPairs& omega,
                     std::span<const Permutation> perms);

struct BaseAssignment {
  std::vector<int> base;              // ascending users, one per file
  std::vector<std::vector<int>> rho;  // [user-1] -> base users; empty on B

  friend bool operator==(const BaseAssignment&, const BaseAssignment&) =
      default;
};

// Base set = lowest-index user per file. rho for each non-base user c maps
// d_c to the base user sharing c's demand and every other file i to a base
// user whose demand differs from i, as a bijection. For N = 2 no such
// bijection exists; rho then sends both files to the base user sharing c's
// demand. Among valid maps one is drawn uniformly with rng.
BaseAssignment ChooseBaseAndRho(const DemandVector& demand, int N, Rng& rng);

// Every valid (B, rho) combination, B ranging over all covering base sets.
std::vector<BaseAssignment> EnumerateBaseAndRho(const DemandVector& demand,
                                                int N);

// Valid rho maps for one non-base user under a fixed base set.
std::vector<std::vector<int>> ValidRhoMaps(const DemandVector& demand, int N,
                                           const std::vector<int>& base,
                                           int user);

struct MupirSession {
  QueryBundle bundle;
  SessionTranscript transcript;
};

// Equal-count regime (N = K, distinct demands).
MupirSession GenerateAlg2(int S, int N, const DemandVector& demand,
                          const Permutation& user_perm,
                          std::vector<std::vector<Permutation>> slot_perms,
                          Rng* emission_rng);

// Surplus-user regime (N < K, every file demanded).
MupirSession GenerateAlg3(int S, int N, const DemandVector& demand,
                          const Permutation& user_perm,
                          const BaseAssignment& assignment,
                          std::vector<std::vector<Permutation>> slot_perms,
                          Rng* emission_rng);

// Draws P, the per-user permutations (tail-fixed on the special file of
// every QSet1 user), (B, rho) when N < K, and the emission order, then
// dispatches to GenerateAlg2 or GenerateAlg3.
MupirSession NewMupirSession(int S, int N, const DemandVector& demand,
                             uint64_t seed);

QueryBundle ReplayMupirBundle(const SessionTranscript& transcript);

// omega pairs for every QSet2 slot of the session, keyed by user.
std::map<int, OmegaPairs> OmegaSlots(const SessionTranscript& transcript);

struct UserDecodeResult {
  std::vector<Block> file;  // K S^(N-1) blocks of W_{d_u}, subfile-major
  bool oracle_agrees = false;
  bool oracle_consistent = false;
};

// Runs user u's peeling plan over answers and cache, and confirms it with
// Gf2Solve over the same equations. Throws kUnresolvable on failure or
// disagreement.
UserDecodeResult DecodeUser(int user, const AnswerSet& answers,
                            const QueryBundle& bundle,
                            const SessionTranscript& transcript,
                            const CacheContent& cache);

}  // namespace mupir

#endif  // MUPIR_MUPIR_H_
