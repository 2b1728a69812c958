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

#ifndef MUPIR_SRC_XOR_DESIGN_H_
#define MUPIR_SRC_XOR_DESIGN_H_

#include <functional>
#include <vector>

namespace mupir::internal {

// One term of a design query: file index and 1-based position in that file's
// permutation order.
struct Term {
  int file = 0;
  int pos = 0;
};

struct DesignQuery {
  int level = 0;
  int fresh_file = 0;       // file whose position was new when emitted
  std::vector<Term> terms;  // fresh term first, then ascending file
};

struct Design {
  std::vector<std::vector<DesignQuery>> per_db;
  std::vector<int> exposed;  // per file (index i-1): positions used, t_i
};

// Parameters of a leveled design over N files and S databases. At level k
// and database s, every k-subset of files is used copies(s, k) times and file
// i receives quota(s, i, k) fresh positions.
struct DesignSpec {
  int S = 0;
  int N = 0;
  std::function<long long(int s, int k)> copies;
  std::function<long long(int s, int i, int k)> quota;
};

// Builds the design. Level 1 is one singleton per file in database 1. For
// each later level the fresh positions are handed out first (falling back to
// the swap move when a file runs out of subsets), then every reused term takes
// the least-repeated already-exposed position of its file in that database.
// Throws kInfeasibleSwap when no swap exists.
Design BuildDesign(const DesignSpec& spec);

// All k-subsets of {1..n}, lexicographic, each ascending.
std::vector<std::vector<int>> Subsets(int n, int k);

}  // namespace mupir::internal

#endif  // MUPIR_SRC_XOR_DESIGN_H_
