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

#ifndef MUPIR_SCHEME_PARAMS_H_
#define MUPIR_SCHEME_PARAMS_H_

#include <vector>

#include "mupir/rational.h"

namespace mupir {

BigInt Binomial(int n, int k);

// Repetition counts of each k-sum in the single-user scheme: g for database
// 1, f for databases 2..S.
struct BaseReps {
  BigInt g;
  BigInt f;
  friend bool operator==(const BaseReps&, const BaseReps&) = default;
};

// g(S,k) = (S-1) f(S,k-1), f(S,k) = (S-2) f(S,k-1) + g(S,k-1), seeded with
// g(S,1)=1, f(S,1)=0.
BaseReps BaseRepsRecurrence(int S, int k);
// g(S,k) = (S-1)/S [(-1)^(k-1) + (S-1)^(k-2)], f(S,k) = 1/S [(-1)^k + (S-1)^(k-1)]
BaseReps BaseRepsClosedForm(int S, int k);
// Both routes; throws kUnresolvable if they ever disagree.
BaseReps ComputeBaseReps(int S, int k);

// phi_s(S,k): g(S,k) for s = 1, f(S,k) otherwise.
BigInt Phi(int s, int S, int k);
// psi_s(S,k) = ceil(k (N-1) / N * phi_s(S,k)).
BigInt Psi(int s, int S, int N, int k);
// Fresh-subsubfile quota of file i in database s at level k when the slot's
// special file is d.
BigInt FreshQuota(int s, int i, int d, int k, int S, int N);

// q = sum_k sum_s C(N,k) psi_s(S,k): queries in one per-slot query set.
BigInt QValue(int S, int N);
// H = q - (N-1) S^(N-1): subsubfiles of the special subfile resolved by
// queries alone.
BigInt HValue(int S, int N);
// M = (N S^(N-1) - q) / (K S^(N-1)).
Rational CacheFraction(int S, int N, int K);

// q / S^(N-1) for N = K; N/K (q / S^(N-1) + K - N) for N < K. Throws
// kUnsupportedRegime when N > K or N < 2.
Rational ProposedRate(int S, int N, int K);
// 1 + 1/S + ... + 1/S^(N-1).
Rational PirRate(int S, int N);

// Product-design rate at the corner M = tN/K, t in [K]:
// min(N (1 - t/K), (K-t)/(t+1) * PirRate(S,N)).
Rational PdCornerRate(int S, int N, int K, int t);

struct RatePoint {
  Rational memory;
  Rational rate;
};

// (0, N) followed by the K integer corners.
std::vector<RatePoint> PdCornerPoints(int S, int N, int K);

// Lower convex hull of PdCornerPoints, left to right.
std::vector<RatePoint> PdLowerEnvelope(int S, int N, int K);

// Product-design rate at arbitrary M in [0, N]: the corner value at integer
// t = KM/N, the lower convex envelope elsewhere. Throws kOutOfRange.
Rational PdRate(int S, int N, int K, const Rational& M);

struct DominanceReport {
  int S = 0;
  int N = 0;
  int K = 0;
  Rational memory;          // M of the proposed scheme
  Rational rate;            // proposed rate
  Rational pd_rate;         // PdRate at memory
  Rational positivity;      // N S^(N-1) - q
  Rational min_chord_margin;  // min over t of chord(t, M) - rate
  std::vector<Rational> chord_margins;  // index t-1
  Rational envelope_margin;   // pd_rate - rate

  bool positivity_ok = false;
  bool chords_ok = false;
  bool envelope_ok = false;
  bool ok() const { return positivity_ok && chords_ok && envelope_ok; }
};

// Exact evaluation of the three dominance claims for one (S, N, K).
DominanceReport RateDominanceCheck(int S, int N, int K);

// All derived quantities for one (S, N, K), computed once.
struct SchemeParams {
  int S = 0;
  int N = 0;
  int K = 0;
  int subpacketization = 0;  // S^(N-1)
  BigInt q;
  BigInt H;
  Rational M;
  Rational rate;
  Rational pir_rate;

  static SchemeParams Compute(int S, int N, int K);
};

}  // namespace mupir

#endif  // MUPIR_SCHEME_PARAMS_H_
