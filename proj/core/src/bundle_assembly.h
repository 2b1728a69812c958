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

#ifndef MUPIR_SRC_BUNDLE_ASSEMBLY_H_
#define MUPIR_SRC_BUNDLE_ASSEMBLY_H_

#include <vector>

#include "mupir/query.h"
#include "mupir/rng.h"
#include "mupir/single_user_pir.h"

namespace mupir::internal {

struct SlotOutput {
  int slot = 0;
  Generator generator = Generator::kAlg1;
  GeneratedLists lists;
};

// Per database, the generated queries of every slot in slot order.
struct Concatenated {
  std::vector<std::vector<Query>> per_db;
  std::vector<std::vector<Provenance>> provenance;
};

Concatenated Concatenate(int S, const std::vector<SlotOutput>& slots);

// Identity order when rng is null, otherwise a uniform shuffle per database.
std::vector<std::vector<int>> DrawEmissionOrder(const Concatenated& c,
                                                Rng* rng);

// Throws kInvalidDimension when the order does not match the sizes.
QueryBundle Emit(const Concatenated& c,
                 const std::vector<std::vector<int>>& order);

}  // namespace mupir::internal

#endif  // MUPIR_SRC_BUNDLE_ASSEMBLY_H_
