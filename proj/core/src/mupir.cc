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

#include "mupir/mupir.h"

#include <algorithm>
#include <string>

#include "bundle_assembly.h"
#include "mupir/error.h"
#include "mupir/scheme_params.h"
#include "xor_design.h"

namespace mupir {
namespace {

int HFor(int S, int N) { return static_cast<int>(ToInt64(HValue(S, N))); }

void CheckPerms(std::span<const Permutation> perms, int N, int sub) {
  Require(static_cast<int>(perms.size()) == N, ErrorCode::kInvalidDimension,
          "need one permutation per file");
  for (const Permutation& p : perms) {
    Require(p.size() == sub, ErrorCode::kInvalidDimension,
            "permutation size differs from S^(N-1)");
  }
}

GeneratedLists Lower(const internal::Design& design, int S,
                     const std::function<void(const internal::Term&,
                                              Query&)>& emit) {
  GeneratedLists out;
  out.per_db.resize(S);
  out.level.resize(S);
  for (int s = 0; s < S; ++s) {
    for (const internal::DesignQuery& dq : design.per_db[s]) {
      Query q;
      for (const internal::Term& term : dq.terms) emit(term, q);
      out.per_db[s].push_back(std::move(q));
      out.level[s].push_back(dq.level);
    }
  }
  return out;
}

DecodeContext UserContext(const QueryBundle& bundle,
                          const SessionTranscript& tr, int user) {
  DecodeContext ctx;
  ctx.bundle = &bundle;
  ctx.omega_slots = OmegaSlots(tr);
  ctx.N = tr.N;
  ctx.subpacketization = Subpacketization(tr.S, tr.N);
  ctx.cache_subfile = tr.user_perm(user);
  ctx.cache_first_t = HFor(tr.S, tr.N) + 1;
  return ctx;
}

void FinishSession(MupirSession& session,
                   const std::vector<internal::SlotOutput>& slots,
                   Rng* emission_rng) {
  SessionTranscript& tr = session.transcript;
  internal::Concatenated c = internal::Concatenate(tr.S, slots);
  tr.emission_order = internal::DrawEmissionOrder(c, emission_rng);
  session.bundle = internal::Emit(c, tr.emission_order);
  tr.plans.clear();
  for (int u = 1; u <= tr.K; ++u) {
    tr.plans.push_back(BuildDecodePlan(UserContext(session.bundle, tr, u), u,
                                       tr.demand[u], tr.K));
  }
}

std::vector<internal::SlotOutput> SlotsFor(const SessionTranscript& tr) {
  std::vector<internal::SlotOutput> slots;
  const std::map<int, OmegaPairs> omega = OmegaSlots(tr);
  for (int u = 1; u <= tr.K; ++u) {
    const auto& perms = tr.slot_perms[u - 1];
    auto it = omega.find(u);
    if (it == omega.end()) {
      slots.push_back({u, Generator::kQSet1,
                       QSet1(tr.S, tr.N, tr.user_perm(u), perms, tr.demand[u])});
    } else {
      slots.push_back(
          {u, Generator::kQSet2, QSet2(tr.S, tr.N, it->second, perms)});
    }
  }
  return slots;
}

void CheckSlotPerms(const std::vector<std::vector<Permutation>>& slot_perms,
                    int K, int N, int sub) {
  Require(static_cast<int>(slot_perms.size()) == K,
          ErrorCode::kInvalidDimension, "need permutations for every user");
  for (const auto& perms : slot_perms) CheckPerms(perms, N, sub);
}

}  // namespace

PlacementResult Placement(const FileStore& store,
                          const Permutation& user_perm) {
  const int N = store.N();
  const int K = store.K();
  Require(N >= 2 && K >= N, ErrorCode::kUnsupportedRegime,
          "placement needs 2 <= N <= K");
  Require(user_perm.size() == K, ErrorCode::kInvalidDimension,
          "user permutation must cover K subfiles");
  const int sub = store.subpacketization();
  const int H = HFor(store.S(), N);

  PlacementResult out;
  for (int j = 1; j <= K; ++j) {
    for (int t = H + 1; t <= sub; ++t) {
      Block line = store.block(1, j, t);
      for (int i = 2; i <= N; ++i) line ^= store.block(i, j, t);
      out.broadcast.push_back({j, t, std::move(line)});
    }
  }
  for (int u = 1; u <= K; ++u) {
    CacheContent cache{u, user_perm(u), {}};
    for (const CacheLine& line : out.broadcast) {
      if (line.subfile == cache.subfile) cache.lines.push_back(line);
    }
    out.caches.push_back(std::move(cache));
  }
  return out;
}

GeneratedLists QSet1(int S, int N, int j, std::span<const Permutation> perms,
                     int d) {
  Require(S >= 2 && N >= 2, ErrorCode::kInvalidDimension,
          "need S >= 2 and N >= 2");
  Require(d >= 1 && d <= N, ErrorCode::kInvalidDemand, "demand out of range");
  Require(j >= 1, ErrorCode::kOutOfRange, "subfile slot must be positive");
  const int sub = Subpacketization(S, N);
  const int H = HFor(S, N);
  CheckPerms(perms, N, sub);
  Require(perms[d - 1].FixesTailAfter(H), ErrorCode::kInvalidDimension,
          "demand-file permutation must fix positions after H");

  internal::DesignSpec spec;
  spec.S = S;
  spec.N = N;
  spec.copies = [&](int s, int k) { return ToInt64(Psi(s, S, N, k)); };
  spec.quota = [&](int s, int i, int k) {
    return ToInt64(FreshQuota(s, i, d, k, S, N));
  };
  const internal::Design design = internal::BuildDesign(spec);
  for (int i = 1; i <= N; ++i) {
    const int want = i == d ? H : sub;
    Require(design.exposed[i - 1] == want, ErrorCode::kUnresolvable,
            "file " + std::to_string(i) + " exposed " +
                std::to_string(design.exposed[i - 1]) + ", expected " +
                std::to_string(want));
  }
  return Lower(design, S, [&](const internal::Term& term, Query& q) {
    q.atoms.push_back({term.file, j, perms[term.file - 1](term.pos)});
  });
}

GeneratedLists QSet2(int S, int N, const OmegaPairs& omega,
                     std::span<const Permutation> perms) {
  Require(S >= 2 && N >= 2, ErrorCode::kInvalidDimension,
          "need S >= 2 and N >= 2");
  Require(static_cast<int>(omega.size()) == N, ErrorCode::kInvalidDimension,
          "need one omega pair per file");
  for (const auto& [a, b] : omega) {
    Require(a >= 1 && b >= 1 && a != b, ErrorCode::kInvalidDimension,
            "omega pair needs two distinct subfiles");
  }
  const int sub = Subpacketization(S, N);
  CheckPerms(perms, N, sub);

  internal::DesignSpec spec;
  spec.S = S;
  spec.N = N;
  spec.copies = [&](int s, int k) { return ToInt64(k * Phi(s, S, k)); };
  spec.quota = [&](int s, int, int k) {
    return ToInt64(Binomial(N - 1, k - 1) * Phi(s, S, k));
  };
  const internal::Design design = internal::BuildDesign(spec);
  for (int i = 1; i <= N; ++i) {
    Require(design.exposed[i - 1] == sub, ErrorCode::kUnresolvable,
            "omega " + std::to_string(i) + " exposed " +
                std::to_string(design.exposed[i - 1]) + " of " +
                std::to_string(sub));
  }
  return Lower(design, S, [&](const internal::Term& term, Query& q) {
    const int x = perms[term.file - 1](term.pos);
    const auto& [a, b] = omega[term.file - 1];
    q.atoms.push_back({term.file, a, x});
    q.atoms.push_back({term.file, b, x});
  });
}

std::vector<std::vector<int>> ValidRhoMaps(const DemandVector& demand, int N,
                                           const std::vector<int>& base,
                                           int user) {
  Require(static_cast<int>(base.size()) == N, ErrorCode::kInvalidDimension,
          "base set must have N users");
  const int dc = demand[user];
  std::vector<std::vector<int>> out;
  if (N == 2) {
    // No bijection satisfies both constraints; both files go to the base
    // user sharing this user's demand.
    for (int b : base) {
      if (demand[b] == dc) out.push_back({b, b});
    }
    return out;
  }
  std::vector<int> order = base;
  std::sort(order.begin(), order.end());
  do {
    bool ok = true;
    for (int i = 1; i <= N && ok; ++i) {
      const int db = demand[order[i - 1]];
      ok = i == dc ? db == i : db != i;
    }
    if (ok) out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

namespace {

void RequireMultiUser(const DemandVector& demand, int N) {
  demand.ValidateForScheme(N);
  Require(demand.K() > N, ErrorCode::kUnsupportedRegime,
          "base set and rho only exist for N < K");
}

std::vector<int> LowestBase(const DemandVector& demand, int N) {
  std::vector<int> base;
  for (int i = 1; i <= N; ++i) {
    for (int u = 1; u <= demand.K(); ++u) {
      if (demand[u] == i) {
        base.push_back(u);
        break;
      }
    }
  }
  std::sort(base.begin(), base.end());
  return base;
}

}  // namespace

BaseAssignment ChooseBaseAndRho(const DemandVector& demand, int N, Rng& rng) {
  RequireMultiUser(demand, N);
  BaseAssignment out;
  out.base = LowestBase(demand, N);
  out.rho.resize(demand.K());
  for (int u = 1; u <= demand.K(); ++u) {
    if (std::binary_search(out.base.begin(), out.base.end(), u)) continue;
    auto maps = ValidRhoMaps(demand, N, out.base, u);
    Require(!maps.empty(), ErrorCode::kUnresolvable,
            "no valid rho for user " + std::to_string(u));
    out.rho[u - 1] = maps[rng.Below(maps.size())];
  }
  return out;
}

std::vector<BaseAssignment> EnumerateBaseAndRho(const DemandVector& demand,
                                                int N) {
  RequireMultiUser(demand, N);
  std::vector<std::vector<int>> by_file(N + 1);
  for (int u = 1; u <= demand.K(); ++u) by_file[demand[u]].push_back(u);

  std::vector<BaseAssignment> out;
  std::vector<size_t> pick(N + 1, 0);
  while (true) {
    std::vector<int> base;
    for (int i = 1; i <= N; ++i) base.push_back(by_file[i][pick[i]]);
    std::sort(base.begin(), base.end());

    std::vector<BaseAssignment> partial{{base, std::vector<std::vector<int>>(
                                                   demand.K())}};
    for (int u = 1; u <= demand.K(); ++u) {
      if (std::binary_search(base.begin(), base.end(), u)) continue;
      const auto maps = ValidRhoMaps(demand, N, base, u);
      std::vector<BaseAssignment> next;
      for (const BaseAssignment& a : partial) {
        for (const auto& m : maps) {
          BaseAssignment b = a;
          b.rho[u - 1] = m;
          next.push_back(std::move(b));
        }
      }
      partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());

    int i = N;
    while (i >= 1 && pick[i] + 1 == by_file[i].size()) pick[i--] = 0;
    if (i < 1) break;
    ++pick[i];
  }
  return out;
}

MupirSession GenerateAlg2(int S, int N, const DemandVector& demand,
                          const Permutation& user_perm,
                          std::vector<std::vector<Permutation>> slot_perms,
                          Rng* emission_rng) {
  demand.ValidateForScheme(N);
  Require(demand.K() == N, ErrorCode::kUnsupportedRegime,
          "this generator covers N = K only");
  Require(user_perm.size() == demand.K(), ErrorCode::kInvalidDimension,
          "user permutation must cover K subfiles");
  CheckSlotPerms(slot_perms, demand.K(), N, Subpacketization(S, N));

  MupirSession session;
  SessionTranscript& tr = session.transcript;
  tr.scheme = Scheme::kMupir;
  tr.S = S;
  tr.N = N;
  tr.K = demand.K();
  tr.demand = demand;
  tr.user_perm = user_perm;
  tr.slot_perms = std::move(slot_perms);
  FinishSession(session, SlotsFor(tr), emission_rng);
  return session;
}

MupirSession GenerateAlg3(int S, int N, const DemandVector& demand,
                          const Permutation& user_perm,
                          const BaseAssignment& assignment,
                          std::vector<std::vector<Permutation>> slot_perms,
                          Rng* emission_rng) {
  RequireMultiUser(demand, N);
  Require(user_perm.size() == demand.K(), ErrorCode::kInvalidDimension,
          "user permutation must cover K subfiles");
  CheckSlotPerms(slot_perms, demand.K(), N, Subpacketization(S, N));
  Require(static_cast<int>(assignment.base.size()) == N &&
              static_cast<int>(assignment.rho.size()) == demand.K(),
          ErrorCode::kInvalidDimension, "malformed base assignment");
  for (int u = 1; u <= demand.K(); ++u) {
    const bool is_base = std::binary_search(assignment.base.begin(),
                                            assignment.base.end(), u);
    if (is_base) continue;
    const auto maps = ValidRhoMaps(demand, N, assignment.base, u);
    Require(std::find(maps.begin(), maps.end(), assignment.rho[u - 1]) !=
                maps.end(),
            ErrorCode::kInvalidDemand,
            "rho of user " + std::to_string(u) + " violates its constraints");
  }

  MupirSession session;
  SessionTranscript& tr = session.transcript;
  tr.scheme = Scheme::kMupir;
  tr.S = S;
  tr.N = N;
  tr.K = demand.K();
  tr.demand = demand;
  tr.user_perm = user_perm;
  tr.slot_perms = std::move(slot_perms);
  tr.base_set = assignment.base;
  tr.rho = assignment.rho;
  FinishSession(session, SlotsFor(tr), emission_rng);
  return session;
}

MupirSession NewMupirSession(int S, int N, const DemandVector& demand,
                             uint64_t seed) {
  Require(S >= 2, ErrorCode::kInvalidDimension, "need S >= 2");
  demand.ValidateForScheme(N);
  const int K = demand.K();
  const int sub = Subpacketization(S, N);
  const int H = HFor(S, N);

  Rng rng(seed);
  const Permutation user_perm = Permutation::Sample(K, rng);
  BaseAssignment assignment;
  if (N < K) assignment = ChooseBaseAndRho(demand, N, rng);
  auto runs_qset1 = [&](int u) {
    return N == K || std::binary_search(assignment.base.begin(),
                                        assignment.base.end(), u);
  };
  std::vector<std::vector<Permutation>> slot_perms(K);
  for (int u = 1; u <= K; ++u) {
    for (int i = 1; i <= N; ++i) {
      const bool fixed = runs_qset1(u) && i == demand[u];
      slot_perms[u - 1].push_back(
          fixed ? Permutation::Sample(sub, rng, H) : Permutation::Sample(sub, rng));
    }
  }
  MupirSession session =
      N == K ? GenerateAlg2(S, N, demand, user_perm, std::move(slot_perms), &rng)
             : GenerateAlg3(S, N, demand, user_perm, assignment,
                            std::move(slot_perms), &rng);
  session.transcript.seed = seed;
  return session;
}

QueryBundle ReplayMupirBundle(const SessionTranscript& tr) {
  Require(tr.scheme == Scheme::kMupir, ErrorCode::kInvalidDimension,
          "not a multi-user transcript");
  return internal::Emit(internal::Concatenate(tr.S, SlotsFor(tr)),
                        tr.emission_order);
}

std::map<int, OmegaPairs> OmegaSlots(const SessionTranscript& tr) {
  std::map<int, OmegaPairs> out;
  if (tr.scheme != Scheme::kMupir || tr.base_set.empty()) return out;
  for (int u = 1; u <= tr.K; ++u) {
    if (tr.IsBase(u)) continue;
    OmegaPairs pairs;
    for (int i = 1; i <= tr.N; ++i) {
      pairs.emplace_back(tr.user_perm(tr.rho[u - 1][i - 1]), tr.user_perm(u));
    }
    out[u] = std::move(pairs);
  }
  return out;
}

UserDecodeResult DecodeUser(int user, const AnswerSet& answers,
                            const QueryBundle& bundle,
                            const SessionTranscript& tr,
                            const CacheContent& cache) {
  Require(user >= 1 && user <= tr.K, ErrorCode::kOutOfRange,
          "user out of range");
  Require(cache.subfile == tr.user_perm(user), ErrorCode::kInvalidDimension,
          "cache does not belong to this user");
  const DecodeContext ctx = UserContext(bundle, tr, user);
  const int d = tr.demand[user];
  const DecodePlan plan = static_cast<int>(tr.plans.size()) >= user
                              ? tr.plans[user - 1]
                              : BuildDecodePlan(ctx, user, d, tr.K);

  UserDecodeResult result;
  result.file = ExecutePlan(plan, ctx, answers, cache.lines, tr.K);

  std::vector<Atom> targets;
  for (int j = 1; j <= tr.K; ++j) {
    for (int x = 1; x <= ctx.subpacketization; ++x) targets.push_back({d, j, x});
  }
  const Gf2Result oracle =
      Gf2Solve(CollectEquations(bundle, answers, cache.lines, tr.N), targets);
  result.oracle_consistent = oracle.consistent;
  result.oracle_agrees = oracle.AllDetermined();
  for (size_t n = 0; n < targets.size() && result.oracle_agrees; ++n) {
    result.oracle_agrees = *oracle.values[n] == result.file[n];
  }
  Require(result.oracle_agrees, ErrorCode::kUnresolvable,
          "peeling decode and GF(2) oracle disagree for user " +
              std::to_string(user));
  return result;
}

}  // namespace mupir
