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

#include "mupir/scheme_params.h"

#include <gtest/gtest.h>

#include <optional>
#include <vector>

#include "mupir/error.h"

namespace mupir {
namespace {

Rational R(int64_t num, int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

BigInt Pow(int base, int exp) {
  BigInt out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// Straight iteration of the recurrence, kept separate from the library.
std::pair<BigInt, BigInt> GF(int S, int k) {
  BigInt g = 1, f = 0;
  if (k >= 2) {
    g = 0;
    f = 1;
  }
  for (int i = 3; i <= k; ++i) {
    const BigInt g_next = (S - 1) * f;
    const BigInt f_next = (S - 2) * f + g;
    g = g_next;
    f = f_next;
  }
  return {g, f};
}

TEST(SchemeParamsTest, BaseRepsForThreeDatabases) {
  EXPECT_EQ(ComputeBaseReps(3, 1), (BaseReps{1, 0}));
  EXPECT_EQ(ComputeBaseReps(3, 2), (BaseReps{0, 1}));
  EXPECT_EQ(ComputeBaseReps(3, 3), (BaseReps{2, 1}));
}

TEST(SchemeParamsTest, ClosedFormMatchesIteratedRecurrence) {
  for (int S = 2; S <= 12; ++S) {
    for (int k = 1; k <= 12; ++k) {
      const auto [g, f] = GF(S, k);
      EXPECT_EQ(BaseRepsClosedForm(S, k), (BaseReps{g, f})) << S << "," << k;
      EXPECT_EQ(BaseRepsRecurrence(S, k), (BaseReps{g, f})) << S << "," << k;
    }
  }
}

TEST(SchemeParamsTest, MultiUserRepetitionsForThreeDatabases) {
  // s = 1 uses g, s > 1 uses f; values for S = N = 3.
  const int G[] = {1, 0, 4};
  const int F[] = {0, 2, 2};
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(Psi(1, 3, 3, k), G[k - 1]) << k;
    for (int s = 2; s <= 3; ++s) EXPECT_EQ(Psi(s, 3, 3, k), F[k - 1]) << k;
  }
}

TEST(SchemeParamsTest, GoldenValues) {
  EXPECT_EQ(QValue(3, 3), 23);
  EXPECT_EQ(HValue(3, 3), 5);
  EXPECT_EQ(CacheFraction(3, 3, 3), R(4, 27));
  EXPECT_EQ(CacheFraction(3, 3, 5), R(4, 45));
  EXPECT_EQ(ProposedRate(3, 3, 3), R(23, 9));
  EXPECT_EQ(ProposedRate(3, 3, 5), R(41, 15));
  EXPECT_EQ(PirRate(4, 3), R(21, 16));
}

TEST(SchemeParamsTest, CountingIdentities) {
  for (int S = 2; S <= 6; ++S) {
    for (int N = 2; N <= 6; ++N) {
      const BigInt sub = Pow(S, N - 1);
      BigInt per_file = 0;
      BigInt all_types = 0;
      for (int k = 1; k <= N; ++k) {
        for (int s = 1; s <= S; ++s) {
          per_file += Binomial(N - 1, k - 1) * Phi(s, S, k);
          all_types += Binomial(N, k) * Phi(s, S, k);
        }
      }
      EXPECT_EQ(per_file, sub);
      EXPECT_EQ(all_types, (Pow(S, N) - 1) / (S - 1));

      for (int d = 1; d <= N; ++d) {
        for (int i = 1; i <= N; ++i) {
          BigInt total = 0;
          for (int k = 1; k <= N; ++k) {
            for (int s = 1; s <= S; ++s) total += FreshQuota(s, i, d, k, S, N);
          }
          EXPECT_EQ(total, i == d ? HValue(S, N) : sub) << S << N << d << i;
        }
        for (int k = 1; k <= N; ++k) {
          for (int s = 1; s <= S; ++s) {
            BigInt row = 0;
            for (int i = 1; i <= N; ++i) row += FreshQuota(s, i, d, k, S, N);
            EXPECT_EQ(row, Binomial(N, k) * Psi(s, S, N, k));
          }
        }
      }
    }
  }
}

TEST(SchemeParamsTest, SmallCaseClosedForms) {
  for (int N = 2; N <= 10; ++N) EXPECT_EQ(QValue(2, N), N * Pow(2, N - 1) - 1);
  for (int S = 2; S <= 10; ++S) EXPECT_EQ(QValue(S, 2), S + 1);
}

// Lower envelope by brute force: every pair of corner points bracketing M.
Rational EnvelopeOracle(int S, int N, int K, const Rational& M) {
  std::vector<RatePoint> pts = {{R(0), R(N)}};
  for (int t = 1; t <= K; ++t) {
    pts.push_back({R(t * N, K), PdCornerRate(S, N, K, t)});
  }
  std::optional<Rational> best;
  for (const RatePoint& a : pts) {
    for (const RatePoint& b : pts) {
      if (!(a.memory <= M && M < b.memory)) continue;
      const Rational v =
          a.rate + (b.rate - a.rate) * (M - a.memory) / (b.memory - a.memory);
      if (!best || v < *best) best = v;
    }
  }
  return *best;
}

TEST(SchemeParamsTest, PdRateMatchesEnvelopeOracle) {
  for (int S = 2; S <= 5; ++S) {
    for (int N = 2; N <= 5; ++N) {
      for (int K = N; K <= 7; ++K) {
        const Rational M = CacheFraction(S, N, K);
        EXPECT_EQ(PdRate(S, N, K, M), EnvelopeOracle(S, N, K, M))
            << S << "," << N << "," << K;
      }
    }
  }
}

TEST(SchemeParamsTest, PdRateAtIntegerPointIsTheCorner) {
  EXPECT_EQ(PdRate(3, 3, 3, R(0)), R(3));
  EXPECT_EQ(PdRate(3, 3, 3, R(1)), PdCornerRate(3, 3, 3, 1));
}

TEST(SchemeParamsTest, PdRateAtExampleMemories) {
  const Rational at3 = PdRate(3, 3, 3, R(4, 27));
  EXPECT_NEAR(at3.ToDouble(), 2.769, 1e-3);
  // Interpolating (0, 3) and (3/5, R_PD(t = 1)) gives 701/243.
  EXPECT_EQ(PdRate(3, 3, 5, R(4, 45)), R(701, 243));
}

TEST(SchemeParamsTest, DominanceHoldsOnGrid) {
  for (int S = 2; S <= 6; ++S) {
    for (int N = 2; N <= 6; ++N) {
      for (int K = N; K <= 8; ++K) {
        const DominanceReport r = RateDominanceCheck(S, N, K);
        EXPECT_TRUE(r.ok()) << S << "," << N << "," << K;
        EXPECT_EQ(r.envelope_margin, r.pd_rate - r.rate);
      }
    }
  }
}

TEST(SchemeParamsTest, RegimeGuards) {
  EXPECT_THROW(ProposedRate(3, 3, 2), Error);
  EXPECT_THROW(CacheFraction(3, 1, 2), Error);
  try {
    RateDominanceCheck(3, 3, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedRegime);
  }
}

TEST(SchemeParamsTest, ComputeBundlesEverything) {
  const SchemeParams p = SchemeParams::Compute(3, 3, 5);
  EXPECT_EQ(p.subpacketization, 9);
  EXPECT_EQ(p.q, 23);
  EXPECT_EQ(p.H, 5);
  EXPECT_EQ(p.M, R(4, 45));
  EXPECT_EQ(p.rate, R(41, 15));
  EXPECT_EQ(p.pir_rate, R(13, 9));
}

}  // namespace
}  // namespace mupir
