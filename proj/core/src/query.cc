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

#include "mupir/query.h"

#include <algorithm>

#include "mupir/error.h"

namespace mupir {

const char* GeneratorName(Generator g) {
  switch (g) {
    case Generator::kAlg1: return "alg1";
    case Generator::kQSet1: return "qset1";
    case Generator::kQSet2: return "qset2";
  }
  return "unknown";
}

size_t QueryBundle::TotalQueries() const {
  size_t n = 0;
  for (const auto& db : per_db) n += db.size();
  return n;
}

std::vector<size_t> QueryBundle::PerDbCounts() const {
  std::vector<size_t> out;
  out.reserve(per_db.size());
  for (const auto& db : per_db) out.push_back(db.size());
  return out;
}

void QueryBundle::Validate() const {
  Require(provenance.size() == per_db.size(), ErrorCode::kInvalidDimension,
          "provenance has wrong database count");
  for (size_t s = 0; s < per_db.size(); ++s) {
    Require(provenance[s].size() == per_db[s].size(),
            ErrorCode::kInvalidDimension,
            "provenance misaligned for database " + std::to_string(s + 1));
  }
}

DbKey CanonicalDbKey(const std::vector<Query>& queries) {
  DbKey key;
  key.reserve(queries.size());
  for (const Query& q : queries) {
    std::vector<Atom> atoms = q.atoms;
    std::sort(atoms.begin(), atoms.end());
    key.push_back(std::move(atoms));
  }
  std::sort(key.begin(), key.end());
  return key;
}

CanonicalKey CanonicalForm(const QueryBundle& bundle) {
  CanonicalKey key;
  key.reserve(bundle.per_db.size());
  for (const auto& db : bundle.per_db) key.push_back(CanonicalDbKey(db));
  return key;
}

std::string ToString(const Atom& atom) {
  return "W" + std::to_string(atom.file) + "," + std::to_string(atom.subfile) +
         "^" + std::to_string(atom.subsub);
}

std::string ToString(const Query& query) {
  std::string out;
  for (size_t i = 0; i < query.atoms.size(); ++i) {
    if (i) out += " + ";
    out += ToString(query.atoms[i]);
  }
  return out;
}

}  // namespace mupir
