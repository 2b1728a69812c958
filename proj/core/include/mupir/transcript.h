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

#ifndef MUPIR_TRANSCRIPT_H_
#define MUPIR_TRANSCRIPT_H_

#include <cstdint>
#include <vector>

#include "mupir/decoder.h"
#include "mupir/demand.h"
#include "mupir/permutation.h"

namespace mupir {

enum class Scheme { kSingle, kMupir };

const char* SchemeName(Scheme scheme);

// All randomness of one session plus the per-user decode plans. Replaying it
// (ReplayBundle in single_user_pir.h / mupir.h) regenerates the bundle bit
// for bit.
struct SessionTranscript {
  Scheme scheme = Scheme::kSingle;
  uint64_t seed = 0;
  int S = 0;
  int N = 0;
  int K = 0;
  DemandVector demand;
  Permutation user_perm;  // p_u = user_perm(u)
  std::vector<std::vector<Permutation>> slot_perms;  // [user-1][file-1]
  std::vector<int> base_set;                         // N < K only, ascending
  std::vector<std::vector<int>> rho;  // [user-1] -> rho^1..rho^N, non-base
  std::vector<std::vector<int>> emission_order;  // [db-1][emitted] = generated
  std::vector<DecodePlan> plans;                 // one per user

  bool IsBase(int user) const;
};

}  // namespace mupir

#endif  // MUPIR_TRANSCRIPT_H_
