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

#ifndef MUPIR_PERMUTATION_H_
#define MUPIR_PERMUTATION_H_

#include <optional>
#include <vector>

#include "mupir/rng.h"

namespace mupir {

// Bijection on {1..n}, stored as the list of images.
class Permutation {
 public:
  Permutation() = default;

  // Validates that images is a permutation of 1..images.size().
  static Permutation FromImages(std::vector<int> images);
  static Permutation Identity(int n);

  // Uniform draw. With tail_fixed = h the draw is uniform over permutations
  // that fix every position in h+1..n.
  static Permutation Sample(int n, Rng& rng,
                            std::optional<int> tail_fixed = std::nullopt);

  int size() const { return static_cast<int>(images_.size()); }

  // Image of the 1-based position t.
  int operator()(int t) const { return images_[t - 1]; }

  const std::vector<int>& images() const { return images_; }

  bool FixesTailAfter(int h) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

// Every admissible permutation of {1..n} under the optional tail constraint,
// in lexicographic order of images. Used by the exhaustive oracles.
std::vector<Permutation> EnumeratePermutations(
    int n, std::optional<int> tail_fixed = std::nullopt);

}  // namespace mupir

#endif  // MUPIR_PERMUTATION_H_
