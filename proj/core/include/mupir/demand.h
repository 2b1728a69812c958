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

#ifndef MUPIR_DEMAND_H_
#define MUPIR_DEMAND_H_

#include <string>
#include <vector>

#include "mupir/rng.h"

namespace mupir {

// theta = (d_1, ..., d_K), 1-based file indices.
class DemandVector {
 public:
  DemandVector() = default;
  explicit DemandVector(std::vector<int> demands)
      : demands_(std::move(demands)) {}

  int K() const { return static_cast<int>(demands_.size()); }
  int operator[](int user) const { return demands_[user - 1]; }
  const std::vector<int>& values() const { return demands_; }

  bool AllDistinct() const;
  bool Covers(int N) const;
  bool InRange(int N) const;

  // The multi-user scheme needs distinct demands when N == K and full
  // coverage of [N] when N < K. Throws kInvalidDemand / kCoverage /
  // kUnsupportedRegime.
  void ValidateForScheme(int N) const;

  // Uniform over demand vectors that ValidateForScheme accepts.
  static DemandVector RandomValid(int N, int K, Rng& rng);

  // Every demand vector accepted by ValidateForScheme, lexicographic.
  static std::vector<DemandVector> EnumerateValid(int N, int K);

  std::string ToString() const;

  friend bool operator==(const DemandVector&, const DemandVector&) = default;

 private:
  std::vector<int> demands_;
};

}  // namespace mupir

#endif  // MUPIR_DEMAND_H_
