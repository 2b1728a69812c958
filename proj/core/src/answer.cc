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

#include "mupir/answer.h"

#include "mupir/error.h"

namespace mupir {

size_t AnswerSet::TotalBlocks() const {
  size_t n = 0;
  for (const auto& db : per_db) n += db.size();
  return n;
}

Block AnswerQuery(const FileStore& store, const Query& query) {
  Require(!query.atoms.empty(), ErrorCode::kOutOfRange, "empty query");
  Block out(static_cast<size_t>(store.block_bytes()));
  auto acc = out.mutable_bytes();
  for (const Atom& a : query.atoms) {
    auto src = store.view(a.file, a.subfile, a.subsub);
    for (size_t b = 0; b < acc.size(); ++b) acc[b] ^= src[b];
  }
  return out;
}

AnswerSet AnswerBundle(const FileStore& store, const QueryBundle& bundle) {
  Require(bundle.S() == store.S(), ErrorCode::kInvalidDimension,
          "bundle addresses " + std::to_string(bundle.S()) +
              " databases, store has " + std::to_string(store.S()));
  AnswerSet answers;
  answers.per_db.resize(bundle.per_db.size());
  for (size_t s = 0; s < bundle.per_db.size(); ++s) {
    answers.per_db[s].reserve(bundle.per_db[s].size());
    for (const Query& q : bundle.per_db[s]) {
      answers.per_db[s].push_back(AnswerQuery(store, q));
    }
  }
  return answers;
}

}  // namespace mupir
