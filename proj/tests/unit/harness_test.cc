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

#include "mupir/harness.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "mupir/error.h"
#include "mupir/report.h"
#include "mupir/scheme_params.h"

namespace mupir {
namespace {

std::string ErrorText(const std::string& text) {
  try {
    ParseConfig(text, "cfg");
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(ParseConfigTest, ReadsAllFields) {
  const SessionConfig c = ParseConfig(
      "# example\n"
      "scheme = mupir\n"
      "S = 3\nN = 3\nK = 5\n"
      "block_bytes = 4   # per subsubfile\n"
      "seed = 42\n"
      "demand = 2,3,2,1,3\n");
  EXPECT_EQ(c.scheme, Scheme::kMupir);
  EXPECT_EQ(c.K, 5);
  EXPECT_EQ(c.block_bytes, 4);
  EXPECT_EQ(c.seed, 42u);
  ASSERT_TRUE(c.demand.has_value());
  EXPECT_EQ(*c.demand, DemandVector({2, 3, 2, 1, 3}));
  EXPECT_EQ(c.lines.at("demand"), 8);
}

TEST(ParseConfigTest, RandomValidDemand) {
  const SessionConfig c =
      ParseConfig("scheme=single\nS=2\nN=4\ndemand=random-valid\n");
  EXPECT_FALSE(c.demand.has_value());
  EXPECT_EQ(c.K, 1);
}

TEST(ParseConfigTest, DiagnosticsNameLineAndField) {
  EXPECT_NE(ErrorText("scheme = single\nS = 3\ncolour = red\n").find(
                "cfg:3: field 'colour': unknown field"),
            std::string::npos);
  EXPECT_NE(ErrorText("scheme = single\nS = three\nN = 2\n").find(
                "cfg:2: field 'S': expected an integer"),
            std::string::npos);
  EXPECT_NE(ErrorText("scheme = single\nN = 2\n").find("missing field 'S'"),
            std::string::npos);
  EXPECT_NE(ErrorText("scheme = single\nS = 3\nS = 4\nN = 2\n").find(
                "cfg:3: field 'S': duplicate (first set on line 2)"),
            std::string::npos);
  EXPECT_NE(ErrorText("scheme = single\nS = 3\nN = 2\nbogus line\n").find(
                "cfg:4: expected 'key = value'"),
            std::string::npos);
  EXPECT_NE(ErrorText("scheme = mupir\nS = 1\nN = 2\nK = 2\n").find(
                "cfg:2: field 'S'"),
            std::string::npos);
}

TEST(ParseConfigTest, RegimeAndDemandErrorsCarryTheirCodes) {
  try {
    ParseConfig("scheme = mupir\nS = 3\nN = 3\nK = 2\n", "cfg");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedRegime);
    EXPECT_NE(std::string(e.what()).find("cfg:4: field 'K'"), std::string::npos);
  }
  try {
    ParseConfig("scheme = mupir\nS = 3\nN = 3\nK = 3\ndemand = 1,1,2\n", "cfg");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidDemand);
    EXPECT_NE(std::string(e.what()).find("cfg:5: field 'demand'"),
              std::string::npos);
  }
}

TEST(RunSessionTest, ExampleSessionsDecodeAtTheirRates) {
  SessionConfig c = ParseConfig(
      "scheme = mupir\nS = 3\nN = 3\nK = 3\nseed = 42\ndemand = 2,1,3\n");
  SessionReport r = RunSession(c);
  EXPECT_TRUE(r.decode_ok) << r.decode_failure;
  EXPECT_TRUE(r.audit_ok) << r.audit_failure;
  EXPECT_EQ(r.rate.ToString(), "23/9");
  EXPECT_EQ(ExitCodeFor(r), 0);

  c = ParseConfig("scheme = mupir\nS = 3\nN = 3\nK = 5\ndemand = 2,3,2,1,3\n");
  r = RunSession(c);
  EXPECT_TRUE(r.decode_ok);
  EXPECT_EQ(r.rate.ToString(), "41/15");
  EXPECT_EQ(r.cache_bytes_per_user * 8 * 45, 4u * r.file_bytes * 8);
}

TEST(RunSessionTest, ReportsAreByteIdenticalForSameSeed) {
  const SessionConfig c =
      ParseConfig("scheme = mupir\nS = 2\nN = 3\nK = 5\nseed = 9\nblock_bytes = 3\n");
  EXPECT_EQ(SessionReportJson(RunSession(c)), SessionReportJson(RunSession(c)));
  SessionConfig other = c;
  other.seed = 10;
  EXPECT_NE(SessionReportJson(RunSession(c)), SessionReportJson(RunSession(other)));
}

TEST(RunSessionTest, ReadsLibraryBytesFromInput) {
  // N = 2 files of S^(N-1) = 2 subsubfiles with K = 1, two bytes each.
  const std::string path = ::testing::TempDir() + "mupir_input.bin";
  {
    std::ofstream out(path, std::ios::binary);
    out << "abcdefgh";
  }
  SessionConfig c = ParseConfig("scheme = single\nS = 2\nN = 2\nblock_bytes = 2\n"
                                "demand = 2\ninput = " + path + "\n");
  const SessionReport r = RunSession(c);
  EXPECT_TRUE(r.decode_ok) << r.decode_failure;
  EXPECT_EQ(r.file_bytes, 4u);
  std::remove(path.c_str());
}

TEST(ExitCodeTest, DecodeBeatsAudit) {
  SessionReport r;
  r.decode_ok = false;
  r.audit_ok = false;
  EXPECT_EQ(ExitCodeFor(r), 3);
  r.decode_ok = true;
  EXPECT_EQ(ExitCodeFor(r), 4);
  r.audit_ok = true;
  EXPECT_EQ(ExitCodeFor(r), 0);
}

TEST(SweepTest, RowOrderAndExampleRows) {
  const std::vector<SweepRow> rows = Sweep({2, 4, 2, 4, 5});
  ASSERT_FALSE(rows.empty());
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto key = [](const SweepRow& r) { return std::tuple(r.S, r.N, r.K); };
    EXPECT_LT(key(rows[i - 1]), key(rows[i]));
  }
  for (const SweepRow& r : rows) {
    EXPECT_TRUE(r.lemma41 && r.lemma43 && r.chords);
    if (r.S == 2 && r.N == 4) EXPECT_EQ(r.q, 31);
    if (r.S == 3 && r.N == 3 && r.K == 3) {
      EXPECT_EQ(r.q, 23);
      EXPECT_EQ(r.H, 5);
      EXPECT_EQ(r.M.ToString(), "4/27");
      EXPECT_EQ(r.rate.ToString(), "23/9");
      EXPECT_NEAR(r.pd_rate.ToDouble(), 2.769, 1e-3);
    }
  }
}

TEST(SweepTest, CsvRoundTripReverifies) {
  const std::vector<SweepRow> rows = Sweep({2, 3, 2, 3, 4});
  const std::string csv = SweepCsv(rows);
  const std::vector<SweepRow> parsed = ParseSweepCsv(csv);
  ASSERT_EQ(parsed.size(), rows.size());
  for (const SweepRow& r : parsed) EXPECT_TRUE(VerifyRow(r));

  SweepRow tampered = parsed.front();
  tampered.rate = tampered.rate + Rational(BigInt(1), BigInt(1000));
  EXPECT_FALSE(VerifyRow(tampered));
  EXPECT_THROW(ParseSweepCsv("S,N\n1,2\n"), Error);
}

}  // namespace
}  // namespace mupir
