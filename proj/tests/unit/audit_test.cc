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

#include "mupir/audit.h"

#include <gtest/gtest.h>

#include "mupir/error.h"
#include "mupir/mupir.h"
#include "mupir/scheme_params.h"
#include "mupir/single_user_pir.h"

namespace mupir {
namespace {

TEST(CheckStructureTest, AcceptsGeneratedBundles) {
  for (int d = 1; d <= 3; ++d) {
    const AuditReport r = CheckStructure(NewSingleSession(3, 3, d, d).bundle, 3, 3);
    EXPECT_TRUE(r.ok) << r.first_failure;
  }
  const MupirSession s = NewMupirSession(3, 3, DemandVector({2, 3, 2, 1, 3}), 2);
  const AuditReport r = CheckStructure(s.bundle, 3, 3);
  EXPECT_TRUE(r.ok) << r.first_failure;
  EXPECT_EQ(r.total_queries, s.bundle.TotalQueries());
  EXPECT_FALSE(r.cells.empty());
}

TEST(CheckStructureTest, SingleUserTypeCountsFollowPhi) {
  const AuditReport r = CheckStructure(NewSingleSession(4, 3, 2, 1).bundle, 4, 3);
  ASSERT_TRUE(r.ok);
  for (const TypeCell& c : r.cells) {
    EXPECT_EQ(BigInt(c.expected), Phi(c.db, 4, c.level));
    EXPECT_EQ(c.count, c.expected);
  }
}

TEST(CountRateTest, MatchesClosedForms) {
  EXPECT_EQ(CountRate(NewSingleSession(3, 4, 1, 0).bundle, 3, 4, 1),
            PirRate(3, 4));
  EXPECT_EQ(CountRate(NewMupirSession(2, 3, DemandVector({3, 1, 2, 2}), 0).bundle,
                      2, 3, 4),
            ProposedRate(2, 3, 4));
}

TEST(MutationTest, EveryKindIsDetected) {
  const QueryBundle single = NewSingleSession(3, 3, 1, 4).bundle;
  const QueryBundle multi =
      NewMupirSession(3, 3, DemandVector({1, 2, 3, 1}), 4).bundle;
  Rng rng(12);
  int seen[3] = {0, 0, 0};
  for (int i = 0; i < 300; ++i) {
    const QueryBundle& base = i % 2 == 0 ? single : multi;
    const Mutation m = RandomMutation(base, 3, rng);
    ++seen[static_cast<int>(m.kind)];
    const AuditReport r = CheckStructure(ApplyMutation(base, m), 3, 3);
    EXPECT_FALSE(r.ok) << MutationKindName(m.kind) << " at db " << m.db
                       << " position " << m.position;
  }
  for (int n : seen) EXPECT_GT(n, 0);
}

TEST(DistributionOracleTest, SmallestSingleUserInstanceIsPrivate) {
  const DistributionVerdict v = DemandDistributionOracle(2, 2, 1, Scheme::kSingle);
  EXPECT_TRUE(v.equal) << v.first_difference;
  EXPECT_EQ(v.demands.size(), 2u);
  EXPECT_GT(v.assignments, 0u);
}

TEST(DistributionOracleTest, SmallestMultiUserInstanceIsPrivate) {
  for (BasePolicy policy : {BasePolicy::kAllBaseSets, BasePolicy::kLowestBase}) {
    const DistributionVerdict v =
        DemandDistributionOracle(2, 2, 2, Scheme::kMupir, policy);
    EXPECT_TRUE(v.equal) << v.first_difference;
    EXPECT_EQ(v.demands.size(), 2u);
  }
}

// With two files no bijection meets the rho constraints, so both of a
// non-base user's pairs point at the base user sharing its demand. That
// choice is visible to the databases.
TEST(DistributionOracleTest, TwoFilesThreeUsersDistributionsDiffer) {
  const DistributionVerdict v =
      DemandDistributionOracle(2, 2, 3, Scheme::kMupir);
  EXPECT_FALSE(v.equal);
  EXPECT_FALSE(v.first_difference.empty());
}

TEST(DistributionOracleTest, RefusesLargeInstances) {
  try {
    DemandDistributionOracle(3, 3, 3, Scheme::kMupir);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

}  // namespace
}  // namespace mupir
