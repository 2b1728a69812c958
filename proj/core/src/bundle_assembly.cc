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

#include "bundle_assembly.h"

#include <numeric>

#include "mupir/error.h"

namespace mupir::internal {

Concatenated Concatenate(int S, const std::vector<SlotOutput>& slots) {
  Concatenated c;
  c.per_db.resize(S);
  c.provenance.resize(S);
  for (const SlotOutput& slot : slots) {
    Require(static_cast<int>(slot.lists.per_db.size()) == S,
            ErrorCode::kInvalidDimension, "slot output has wrong db count");
    for (int s = 0; s < S; ++s) {
      const auto& queries = slot.lists.per_db[s];
      for (size_t n = 0; n < queries.size(); ++n) {
        c.per_db[s].push_back(queries[n]);
        c.provenance[s].push_back({slot.slot, slot.generator,
                                   static_cast<int>(n),
                                   slot.lists.level[s][n]});
      }
    }
  }
  return c;
}

std::vector<std::vector<int>> DrawEmissionOrder(const Concatenated& c,
                                                Rng* rng) {
  std::vector<std::vector<int>> order(c.per_db.size());
  for (size_t s = 0; s < c.per_db.size(); ++s) {
    order[s].resize(c.per_db[s].size());
    std::iota(order[s].begin(), order[s].end(), 0);
    if (rng != nullptr) rng->Shuffle(std::span<int>(order[s]));
  }
  return order;
}

QueryBundle Emit(const Concatenated& c,
                 const std::vector<std::vector<int>>& order) {
  Require(order.size() == c.per_db.size(), ErrorCode::kInvalidDimension,
          "emission order has wrong db count");
  QueryBundle b;
  b.per_db.resize(c.per_db.size());
  b.provenance.resize(c.per_db.size());
  for (size_t s = 0; s < c.per_db.size(); ++s) {
    Require(order[s].size() == c.per_db[s].size(),
            ErrorCode::kInvalidDimension, "emission order has wrong length");
    std::vector<bool> seen(order[s].size(), false);
    for (int g : order[s]) {
      Require(g >= 0 && g < static_cast<int>(seen.size()) && !seen[g],
              ErrorCode::kInvalidDimension, "emission order is not a bijection");
      seen[g] = true;
      b.per_db[s].push_back(c.per_db[s][g]);
      b.provenance[s].push_back(c.provenance[s][g]);
    }
  }
  return b;
}

}  // namespace mupir::internal
