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

#include <gtest/gtest.h>

namespace mupir {
namespace {

Query Q(std::vector<Atom> atoms) { return Query{std::move(atoms)}; }

TEST(QueryTest, CanonicalKeyIgnoresOrder) {
  const std::vector<Query> a = {Q({{1, 1, 3}, {2, 1, 1}}), Q({{3, 1, 2}})};
  const std::vector<Query> b = {Q({{3, 1, 2}}), Q({{2, 1, 1}, {1, 1, 3}})};
  EXPECT_EQ(CanonicalDbKey(a), CanonicalDbKey(b));
}

TEST(QueryTest, CanonicalKeySeesMultiplicityAndContent) {
  const std::vector<Query> once = {Q({{1, 1, 1}})};
  const std::vector<Query> twice = {Q({{1, 1, 1}}), Q({{1, 1, 1}})};
  const std::vector<Query> other = {Q({{1, 1, 2}})};
  EXPECT_NE(CanonicalDbKey(once), CanonicalDbKey(twice));
  EXPECT_NE(CanonicalDbKey(once), CanonicalDbKey(other));
}

TEST(QueryTest, BundleCountsAndValidation) {
  QueryBundle b;
  b.per_db = {{Q({{1, 1, 1}}), Q({{2, 1, 1}})}, {Q({{1, 1, 2}, {2, 1, 1}})}};
  b.provenance = {{Provenance{}, Provenance{}}, {Provenance{}}};
  EXPECT_EQ(b.S(), 2);
  EXPECT_EQ(b.TotalQueries(), 3u);
  EXPECT_EQ(b.PerDbCounts(), (std::vector<size_t>{2, 1}));
  EXPECT_NO_THROW(b.Validate());
  b.provenance[1].clear();
  EXPECT_ANY_THROW(b.Validate());
}

TEST(QueryTest, ToStringNamesAtoms) {
  EXPECT_EQ(ToString(Q({{2, 1, 8}, {3, 2, 2}})), "W2,1^8 + W3,2^2");
}

}  // namespace
}  // namespace mupir
