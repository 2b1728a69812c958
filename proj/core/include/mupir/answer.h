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

#ifndef MUPIR_ANSWER_H_
#define MUPIR_ANSWER_H_

#include <vector>

#include "mupir/block.h"
#include "mupir/file_store.h"
#include "mupir/query.h"

namespace mupir {

// One block per query, aligned with QueryBundle::per_db.
struct AnswerSet {
  std::vector<std::vector<Block>> per_db;

  size_t TotalBlocks() const;
};

// Each database XORs the referenced subsubfiles. Throws kOutOfRange on an
// atom outside the store.
AnswerSet AnswerBundle(const FileStore& store, const QueryBundle& bundle);
Block AnswerQuery(const FileStore& store, const Query& query);

}  // namespace mupir

#endif  // MUPIR_ANSWER_H_
