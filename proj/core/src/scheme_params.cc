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

#include <string>

#include "mupir/error.h"
#include "mupir/file_store.h"

namespace mupir {
namespace {

BigInt Power(int base, int exponent) {
  BigInt out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

void RequireSk(int S, int k) {
  Require(S >= 2, ErrorCode::kInvalidDimension, "need S >= 2");
  Require(k >= 1, ErrorCode::kInvalidDimension, "need k >= 1");
}

void RequireSN(int S, int N) {
  Require(S >= 2, ErrorCode::kInvalidDimension, "need S >= 2");
  Require(N >= 2, ErrorCode::kInvalidDimension, "need N >= 2");
}

void RequireRegime(int N, int K) {
  Require(N >= 2 && K >= N, ErrorCode::kUnsupportedRegime,
          "the multi-user scheme needs 2 <= N <= K, got N=" +
              std::to_string(N) + " K=" + std::to_string(K));
}

}  // namespace

BigInt Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BaseReps BaseRepsRecurrence(int S, int k) {
  RequireSk(S, k);
  BaseReps r{1, 0};
  for (int m = 2; m <= k; ++m) {
    BaseReps next{(S - 1) * r.f, (S - 2) * r.f + r.g};
    r = std::move(next);
  }
  return r;
}

BaseReps BaseRepsClosedForm(int S, int k) {
  RequireSk(S, k);
  const Rational sign_km1 = (k - 1) % 2 == 0 ? 1 : -1;
  // (S-1)^(k-2) is 1/(S-1) at k = 1.
  const Rational pow_km2 = k >= 2 ? Rational(Power(S - 1, k - 2))
                                  : Rational(1, S - 1);
  const Rational g = Rational(S - 1, S) * (sign_km1 + pow_km2);
  const Rational f = Rational(1, S) * (-sign_km1 + Rational(Power(S - 1, k - 1)));
  Require(g.IsInteger() && f.IsInteger(), ErrorCode::kUnresolvable,
          "closed form g/f not integral at S=" + std::to_string(S) +
              " k=" + std::to_string(k));
  return BaseReps{g.num(), f.num()};
}

BaseReps ComputeBaseReps(int S, int k) {
  BaseReps rec = BaseRepsRecurrence(S, k);
  BaseReps closed = BaseRepsClosedForm(S, k);
  Require(rec == closed, ErrorCode::kUnresolvable,
          "g/f recurrence disagrees with closed form at S=" +
              std::to_string(S) + " k=" + std::to_string(k));
  return rec;
}

BigInt Phi(int s, int S, int k) {
  Require(s >= 1 && s <= S, ErrorCode::kOutOfRange, "database out of range");
  BaseReps r = BaseRepsRecurrence(S, k);
  return s == 1 ? r.g : r.f;
}

BigInt Psi(int s, int S, int N, int k) {
  Require(N >= 1 && k >= 1 && k <= N, ErrorCode::kOutOfRange,
          "k outside [1, N]");
  Rational x = Rational(BigInt(k) * (N - 1), BigInt(N)) * Rational(Phi(s, S, k));
  return x.Ceil();
}

BigInt FreshQuota(int s, int i, int d, int k, int S, int N) {
  Require(i >= 1 && i <= N && d >= 1 && d <= N, ErrorCode::kOutOfRange,
          "file index out of range");
  const BigInt shared = Binomial(N - 1, k - 1) * Phi(s, S, k);
  if (i != d) return shared;
  return Binomial(N, k) * Psi(s, S, N, k) - (N - 1) * shared;
}

BigInt QValue(int S, int N) {
  RequireSN(S, N);
  BigInt q = 0;
  for (int k = 1; k <= N; ++k) {
    for (int s = 1; s <= S; ++s) q += Binomial(N, k) * Psi(s, S, N, k);
  }
  return q;
}

BigInt HValue(int S, int N) {
  return QValue(S, N) - (N - 1) * Power(S, N - 1);
}

Rational CacheFraction(int S, int N, int K) {
  RequireRegime(N, K);
  const BigInt sub = Power(S, N - 1);
  return Rational(N * sub - QValue(S, N), K * sub);
}

Rational ProposedRate(int S, int N, int K) {
  RequireRegime(N, K);
  RequireSN(S, N);
  const Rational per_slot = Rational(QValue(S, N), Power(S, N - 1));
  if (N == K) return per_slot;
  return Rational(N, K) * (per_slot + Rational(K - N));
}

Rational PirRate(int S, int N) {
  Require(S >= 2 && N >= 1, ErrorCode::kInvalidDimension,
          "PIR rate needs S >= 2, N >= 1");
  return Rational(Power(S, N) - 1, (S - 1) * Power(S, N - 1));
}

Rational PdCornerRate(int S, int N, int K, int t) {
  Require(t >= 1 && t <= K, ErrorCode::kOutOfRange, "t outside [1, K]");
  const Rational uncoded = Rational(N) * (Rational(1) - Rational(t, K));
  const Rational pir = Rational(K - t, t + 1) * PirRate(S, N);
  return uncoded < pir ? uncoded : pir;
}

std::vector<RatePoint> PdCornerPoints(int S, int N, int K) {
  Require(K >= 1, ErrorCode::kInvalidDimension, "need K >= 1");
  std::vector<RatePoint> pts;
  pts.push_back({Rational(0), Rational(N)});
  for (int t = 1; t <= K; ++t) {
    pts.push_back({Rational(t * N, K), PdCornerRate(S, N, K, t)});
  }
  return pts;
}

std::vector<RatePoint> PdLowerEnvelope(int S, int N, int K) {
  std::vector<RatePoint> hull;
  for (const RatePoint& p : PdCornerPoints(S, N, K)) {
    while (hull.size() >= 2) {
      const RatePoint& a = hull[hull.size() - 2];
      const RatePoint& b = hull.back();
      Rational cross = (b.memory - a.memory) * (p.rate - a.rate) -
                       (b.rate - a.rate) * (p.memory - a.memory);
      if (cross > Rational(0)) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return hull;
}

Rational PdRate(int S, int N, int K, const Rational& M) {
  Require(M >= Rational(0) && M <= Rational(N), ErrorCode::kOutOfRange,
          "M = " + M.ToString() + " outside [0, N]");
  const Rational t = Rational(K) * M / Rational(N);
  if (t.IsInteger()) {
    const int64_t ti = ToInt64(t.num());
    if (ti == 0) return Rational(N);
    return PdCornerRate(S, N, K, static_cast<int>(ti));
  }
  const std::vector<RatePoint> hull = PdLowerEnvelope(S, N, K);
  for (size_t i = 1; i < hull.size(); ++i) {
    const RatePoint& a = hull[i - 1];
    const RatePoint& b = hull[i];
    if (M <= b.memory) {
      return a.rate + (b.rate - a.rate) * (M - a.memory) / (b.memory - a.memory);
    }
  }
  return hull.back().rate;
}

DominanceReport RateDominanceCheck(int S, int N, int K) {
  RequireSN(S, N);
  RequireRegime(N, K);
  DominanceReport r;
  r.S = S;
  r.N = N;
  r.K = K;
  r.memory = CacheFraction(S, N, K);
  r.rate = ProposedRate(S, N, K);
  r.positivity = Rational(N * Power(S, N - 1) - QValue(S, N));
  r.positivity_ok = r.positivity > Rational(0);

  r.chords_ok = true;
  for (int t = 1; t <= K; ++t) {
    const Rational Rt = PdCornerRate(S, N, K, t);
    const Rational chord =
        Rational(N) - Rational(K, t * N) * (Rational(N) - Rt) * r.memory;
    Rational margin = chord - r.rate;
    if (t == 1 || margin < r.min_chord_margin) r.min_chord_margin = margin;
    if (!(margin > Rational(0))) r.chords_ok = false;
    r.chord_margins.push_back(std::move(margin));
  }

  r.pd_rate = PdRate(S, N, K, r.memory);
  r.envelope_margin = r.pd_rate - r.rate;
  r.envelope_ok = r.envelope_margin > Rational(0);
  return r;
}

SchemeParams SchemeParams::Compute(int S, int N, int K) {
  RequireSN(S, N);
  RequireRegime(N, K);
  SchemeParams p;
  p.S = S;
  p.N = N;
  p.K = K;
  p.subpacketization = Subpacketization(S, N);
  p.q = QValue(S, N);
  p.H = p.q - (N - 1) * BigInt(p.subpacketization);
  p.M = CacheFraction(S, N, K);
  p.rate = ProposedRate(S, N, K);
  p.pir_rate = PirRate(S, N);
  Require(p.H > 0 && p.H <= p.subpacketization, ErrorCode::kUnresolvable,
          "H = " + p.H.str() + " outside (0, S^(N-1)]");
  return p;
}

}  // namespace mupir
