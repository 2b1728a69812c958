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

#include "mupir/demand.h"

#include <algorithm>
#include <set>

#include "mupir/error.h"

namespace mupir {

bool DemandVector::AllDistinct() const {
  std::set<int> s(demands_.begin(), demands_.end());
  return s.size() == demands_.size();
}

bool DemandVector::Covers(int N) const {
  std::vector<bool> hit(N + 1, false);
  for (int d : demands_) {
    if (d >= 1 && d <= N) hit[d] = true;
  }
  return std::all_of(hit.begin() + 1, hit.end(), [](bool b) { return b; });
}

bool DemandVector::InRange(int N) const {
  return std::all_of(demands_.begin(), demands_.end(),
                     [N](int d) { return d >= 1 && d <= N; });
}

void DemandVector::ValidateForScheme(int N) const {
  Require(N >= 2, ErrorCode::kInvalidDimension, "need N >= 2");
  Require(K() >= N, ErrorCode::kUnsupportedRegime,
          "N=" + std::to_string(N) + " > K=" + std::to_string(K()) +
              " is not supported");
  Require(InRange(N), ErrorCode::kInvalidDemand,
          "demand " + ToString() + " outside [1, " + std::to_string(N) + "]");
  if (K() == N) {
    Require(AllDistinct(), ErrorCode::kInvalidDemand,
            "N = K requires distinct demands, got " + ToString());
  } else {
    Require(Covers(N), ErrorCode::kCoverage,
            "every file must be demanded, got " + ToString());
  }
}

DemandVector DemandVector::RandomValid(int N, int K, Rng& rng) {
  Require(N >= 2 && K >= N, ErrorCode::kUnsupportedRegime,
          "random demands need 2 <= N <= K");
  if (K == N) {
    std::vector<int> d(K);
    for (int i = 0; i < K; ++i) d[i] = i + 1;
    rng.Shuffle(std::span<int>(d));
    return DemandVector(std::move(d));
  }
  // Rejection sampling keeps the draw uniform over the valid set.
  while (true) {
    std::vector<int> d(K);
    for (int& v : d) v = static_cast<int>(rng.Below(N)) + 1;
    DemandVector out(std::move(d));
    if (K == N ? out.AllDistinct() : out.Covers(N)) return out;
  }
}

std::vector<DemandVector> DemandVector::EnumerateValid(int N, int K) {
  std::vector<DemandVector> out;
  std::vector<int> d(K, 1);
  while (true) {
    DemandVector v(d);
    if (K == N ? v.AllDistinct() : v.Covers(N)) out.push_back(v);
    int pos = K - 1;
    while (pos >= 0 && d[pos] == N) d[pos--] = 1;
    if (pos < 0) break;
    ++d[pos];
  }
  return out;
}

std::string DemandVector::ToString() const {
  std::string out = "(";
  for (size_t i = 0; i < demands_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(demands_[i]);
  }
  return out + ")";
}

}  // namespace mupir
