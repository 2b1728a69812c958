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

#ifndef MUPIR_QUERY_H_
#define MUPIR_QUERY_H_

#include <compare>
#include <string>
#include <vector>

namespace mupir {

// One term W_{file,subfile}^{subsub} of a transmitted XOR. 1-based.
struct Atom {
  int file = 0;
  int subfile = 0;
  int subsub = 0;

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

// A query asks a database for the XOR of its atoms.
struct Query {
  std::vector<Atom> atoms;

  size_t size() const { return atoms.size(); }
  friend auto operator<=>(const Query&, const Query&) = default;
  friend bool operator==(const Query&, const Query&) = default;
};

enum class Generator { kAlg1, kQSet1, kQSet2 };

const char* GeneratorName(Generator g);

// Which generator call produced a query. Private to the users; never part of
// what a database sees.
struct Provenance {
  int slot = 0;         // user lambda whose generator call produced it
  Generator generator = Generator::kAlg1;
  int local_index = 0;  // generation order inside (slot, database)
  int level = 0;        // k of the k-sum (in file or omega units)

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// Per-database query lists for one session, with aligned provenance.
struct QueryBundle {
  std::vector<std::vector<Query>> per_db;
  std::vector<std::vector<Provenance>> provenance;

  int S() const { return static_cast<int>(per_db.size()); }
  size_t TotalQueries() const;
  std::vector<size_t> PerDbCounts() const;

  // Throws kInvalidDimension unless provenance is aligned with per_db.
  void Validate() const;

  friend bool operator==(const QueryBundle&, const QueryBundle&) = default;
};

// What one database observes, order-free: the sorted multiset of sorted atom
// lists.
using DbKey = std::vector<std::vector<Atom>>;
using CanonicalKey = std::vector<DbKey>;

DbKey CanonicalDbKey(const std::vector<Query>& queries);
CanonicalKey CanonicalForm(const QueryBundle& bundle);

std::string ToString(const Atom& atom);
std::string ToString(const Query& query);

}  // namespace mupir

#endif  // MUPIR_QUERY_H_
