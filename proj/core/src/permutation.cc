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

#include "mupir/permutation.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "mupir/error.h"

namespace mupir {

Permutation Permutation::FromImages(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : images) {
    Require(v >= 1 && v <= n && !seen[v], ErrorCode::kInvalidDimension,
            "not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::Identity(int n) {
  Require(n >= 0, ErrorCode::kInvalidDimension, "negative permutation size");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::Sample(int n, Rng& rng, std::optional<int> tail_fixed) {
  const int h = tail_fixed.value_or(n);
  Require(h >= 0 && h <= n, ErrorCode::kInvalidDimension,
          "tail constraint " + std::to_string(h) + " outside [0, " +
              std::to_string(n) + "]");
  Permutation p = Identity(n);
  rng.Shuffle(std::span<int>(p.images_.data(), static_cast<size_t>(h)));
  return p;
}

bool Permutation::FixesTailAfter(int h) const {
  for (int t = h + 1; t <= size(); ++t) {
    if ((*this)(t) != t) return false;
  }
  return true;
}

std::vector<Permutation> EnumeratePermutations(int n,
                                               std::optional<int> tail_fixed) {
  const int h = tail_fixed.value_or(n);
  Require(h >= 0 && h <= n, ErrorCode::kInvalidDimension,
          "tail constraint outside range");
  std::vector<int> head(h);
  std::iota(head.begin(), head.end(), 1);
  std::vector<Permutation> out;
  do {
    std::vector<int> images = head;
    for (int t = h + 1; t <= n; ++t) images.push_back(t);
    out.push_back(Permutation::FromImages(std::move(images)));
  } while (std::next_permutation(head.begin(), head.end()));
  return out;
}

}  // namespace mupir
