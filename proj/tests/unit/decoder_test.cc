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

#include "mupir/decoder.h"

#include <gtest/gtest.h>

#include "mupir/answer.h"
#include "mupir/error.h"
#include "mupir/file_store.h"
#include "mupir/single_user_pir.h"

namespace mupir {
namespace {

Block B(uint8_t v) { return Block(std::vector<uint8_t>{v}); }

TEST(Gf2SolveTest, SolvesTriangularAndDenseSystems) {
  const Atom x{1, 1, 1}, y{2, 1, 1}, z{3, 1, 1};
  // x ^ y = 3, y ^ z = 5, x ^ y ^ z = 6  =>  x = 3, y = 0, z = 5.
  const std::vector<XorEquation> eqs = {
      {{x, y}, B(3)}, {{y, z}, B(5)}, {{x, y, z}, B(6)}};
  const Gf2Result r = Gf2Solve(eqs, {x, y, z});
  ASSERT_TRUE(r.consistent);
  ASSERT_TRUE(r.AllDetermined());
  EXPECT_EQ(*r.values[0], B(3));
  EXPECT_EQ(*r.values[1], B(0));
  EXPECT_EQ(*r.values[2], B(5));
}

TEST(Gf2SolveTest, ReportsUndeterminedAndInconsistent) {
  const Atom x{1, 1, 1}, y{2, 1, 1};
  const Gf2Result under = Gf2Solve({{{x, y}, B(3)}}, {x, y});
  EXPECT_TRUE(under.consistent);
  EXPECT_FALSE(under.AllDetermined());

  const Gf2Result bad = Gf2Solve({{{x}, B(1)}, {{x}, B(2)}}, {x});
  EXPECT_FALSE(bad.consistent);
}

class SinglePlanTest : public ::testing::Test {
 protected:
  SinglePlanTest()
      : store_(FileStore::Build(3, 1, 4, 4, 5)),
        session_(NewSingleSession(4, 3, 3, 21)),
        answers_(AnswerBundle(store_, session_.bundle)) {
    ctx_.bundle = &session_.bundle;
    ctx_.N = 3;
    ctx_.subpacketization = 16;
  }

  FileStore store_;
  SingleSession session_;
  AnswerSet answers_;
  DecodeContext ctx_;
};

TEST_F(SinglePlanTest, PlanIsDeterministicAndRecoversFile) {
  const DecodePlan plan = BuildDecodePlan(ctx_, 1, 3, 1);
  EXPECT_EQ(plan, BuildDecodePlan(ctx_, 1, 3, 1));
  EXPECT_EQ(ExecutePlan(plan, ctx_, answers_, {}, 1), store_.file(3));
}

TEST_F(SinglePlanTest, PeelingAgreesWithGf2OnEveryBlock) {
  const DecodePlan plan = BuildDecodePlan(ctx_, 1, 3, 1);
  const std::vector<Block> peeled = ExecutePlan(plan, ctx_, answers_, {}, 1);
  std::vector<Atom> targets;
  for (int x = 1; x <= 16; ++x) targets.push_back({3, 1, x});
  const Gf2Result solved =
      Gf2Solve(CollectEquations(session_.bundle, answers_, {}, 3), targets);
  ASSERT_TRUE(solved.AllDetermined());
  for (int x = 0; x < 16; ++x) EXPECT_EQ(*solved.values[x], peeled[x]);
}

TEST_F(SinglePlanTest, DroppedQueryIsUnresolvable) {
  QueryBundle cut = session_.bundle;
  // The last query of database 2 carries a fresh index of the demand file.
  cut.per_db[1].pop_back();
  cut.provenance[1].pop_back();
  DecodeContext ctx = ctx_;
  ctx.bundle = &cut;
  try {
    BuildDecodePlan(ctx, 1, 3, 1);
    FAIL() << "plan built without a needed query";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnresolvable);
  }
}

}  // namespace
}  // namespace mupir
