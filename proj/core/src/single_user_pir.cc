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

#include "mupir/single_user_pir.h"

#include <string>

#include "bundle_assembly.h"
#include "mupir/decoder.h"
#include "mupir/error.h"
#include "mupir/file_store.h"
#include "mupir/scheme_params.h"
#include "xor_design.h"

namespace mupir {
namespace {

using internal::Term;

Query ToQuery(const std::vector<Term>& terms,
              std::span<const Permutation> perms) {
  Query q;
  for (const Term& term : terms) {
    q.atoms.push_back({term.file, 1, perms[term.file - 1](term.pos)});
  }
  return q;
}

DecodeContext SingleContext(const QueryBundle& bundle, int N, int sub) {
  DecodeContext ctx;
  ctx.bundle = &bundle;
  ctx.N = N;
  ctx.subpacketization = sub;
  return ctx;
}

}  // namespace

GeneratedLists RunAlg1(int S, int N, std::span<const Permutation> perms,
                       int d) {
  Require(S >= 2 && N >= 1, ErrorCode::kInvalidDimension,
          "need S >= 2 and N >= 1");
  Require(d >= 1 && d <= N, ErrorCode::kInvalidDemand,
          "demand " + std::to_string(d) + " outside [1, " +
              std::to_string(N) + "]");
  const int sub = Subpacketization(S, N);
  Require(static_cast<int>(perms.size()) == N, ErrorCode::kInvalidDimension,
          "need one permutation per file");
  for (const Permutation& p : perms) {
    Require(p.size() == sub, ErrorCode::kInvalidDimension,
            "permutation size differs from S^(N-1)");
  }

  // Terms are (file, position); positions go through the permutations last.
  std::vector<std::vector<std::vector<Term>>> lists(S);
  std::vector<std::vector<int>> levels(S);
  std::vector<int> t(N + 1, 1);
  for (int i = 1; i <= N; ++i) {
    lists[0].push_back({{i, 1}});
    levels[0].push_back(1);
  }

  for (int k = 2; t[d] < sub; ++k) {
    Require(k <= N, ErrorCode::kUnresolvable,
            "demand file not exhausted after N-sums");
    const auto others = internal::Subsets(N - 1, k);
    for (int j = 1; j <= S; ++j) {
      bool reused = false;
      for (int i = 1; i <= S; ++i) {
        if (i == j) continue;
        // Only queries from earlier levels qualify, so the list can be
        // indexed while j's list grows.
        for (size_t n = 0; n < lists[i - 1].size(); ++n) {
          const auto& q = lists[i - 1][n];
          if (static_cast<int>(q.size()) != k - 1) continue;
          bool has_d = false;
          for (const Term& term : q) has_d |= term.file == d;
          if (has_d) continue;
          std::vector<Term> next = q;
          next.push_back({d, ++t[d]});
          lists[j - 1].push_back(std::move(next));
          levels[j - 1].push_back(k);
          reused = true;
        }
      }
      if (!reused) continue;
      const long long reps = ToInt64(Phi(j, S, k));
      for (const auto& subset : others) {
        for (long long r = 0; r < reps; ++r) {
          std::vector<Term> next;
          for (int x : subset) {
            const int file = x < d ? x : x + 1;
            next.push_back({file, ++t[file]});
          }
          lists[j - 1].push_back(std::move(next));
          levels[j - 1].push_back(k);
        }
      }
    }
  }

  Require(t[d] == sub, ErrorCode::kUnresolvable,
          "demand file exposed " + std::to_string(t[d]) + " of " +
              std::to_string(sub) + " subfiles");

  GeneratedLists out;
  out.per_db.resize(S);
  out.level = std::move(levels);
  for (int s = 0; s < S; ++s) {
    for (const auto& terms : lists[s]) out.per_db[s].push_back(ToQuery(terms, perms));
  }
  return out;
}

SingleSession GenerateAlg1(int S, int N, std::span<const Permutation> perms,
                           int d, Rng* emission_rng) {
  std::vector<internal::SlotOutput> slots;
  slots.push_back({1, Generator::kAlg1, RunAlg1(S, N, perms, d)});
  internal::Concatenated c = internal::Concatenate(S, slots);

  SingleSession session;
  SessionTranscript& tr = session.transcript;
  tr.scheme = Scheme::kSingle;
  tr.S = S;
  tr.N = N;
  tr.K = 1;
  tr.demand = DemandVector({d});
  tr.user_perm = Permutation::Identity(1);
  tr.slot_perms = {std::vector<Permutation>(perms.begin(), perms.end())};
  tr.emission_order = internal::DrawEmissionOrder(c, emission_rng);
  session.bundle = internal::Emit(c, tr.emission_order);

  const DecodeContext ctx =
      SingleContext(session.bundle, N, Subpacketization(S, N));
  tr.plans.push_back(BuildDecodePlan(ctx, 1, d, 1));
  return session;
}

SingleSession NewSingleSession(int S, int N, int d, uint64_t seed) {
  Require(S >= 2 && N >= 1, ErrorCode::kInvalidDimension,
          "need S >= 2 and N >= 1");
  Require(d >= 1 && d <= N, ErrorCode::kInvalidDemand, "demand out of range");
  Rng rng(seed);
  const int sub = Subpacketization(S, N);
  std::vector<Permutation> perms;
  for (int i = 0; i < N; ++i) perms.push_back(Permutation::Sample(sub, rng));
  SingleSession session = GenerateAlg1(S, N, perms, d, &rng);
  session.transcript.seed = seed;
  return session;
}

QueryBundle ReplaySingleBundle(const SessionTranscript& tr) {
  Require(tr.scheme == Scheme::kSingle && tr.slot_perms.size() == 1,
          ErrorCode::kInvalidDimension, "not a single-user transcript");
  std::vector<internal::SlotOutput> slots;
  slots.push_back(
      {1, Generator::kAlg1, RunAlg1(tr.S, tr.N, tr.slot_perms[0], tr.demand[1])});
  return internal::Emit(internal::Concatenate(tr.S, slots), tr.emission_order);
}

SingleDecodeResult DecodeSingle(const AnswerSet& answers,
                                const QueryBundle& bundle,
                                const SessionTranscript& tr) {
  const int sub = Subpacketization(tr.S, tr.N);
  const int d = tr.demand[1];
  const DecodeContext ctx = SingleContext(bundle, tr.N, sub);
  const DecodePlan plan =
      tr.plans.empty() ? BuildDecodePlan(ctx, 1, d, 1) : tr.plans[0];

  SingleDecodeResult result;
  result.file = ExecutePlan(plan, ctx, answers, {}, 1);

  std::vector<Atom> targets;
  for (int x = 1; x <= sub; ++x) targets.push_back({d, 1, x});
  const Gf2Result oracle =
      Gf2Solve(CollectEquations(bundle, answers, {}, tr.N), targets);
  result.oracle_consistent = oracle.consistent;
  result.oracle_agrees = oracle.AllDetermined();
  for (int x = 0; x < sub && result.oracle_agrees; ++x) {
    result.oracle_agrees = *oracle.values[x] == result.file[x];
  }
  Require(result.oracle_agrees, ErrorCode::kUnresolvable,
          "peeling decode and GF(2) oracle disagree");
  return result;
}

}  // namespace mupir
