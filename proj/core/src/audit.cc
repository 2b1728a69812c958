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

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "mupir/error.h"
#include "mupir/file_store.h"
#include "mupir/mupir.h"
#include "mupir/scheme_params.h"
#include "mupir/single_user_pir.h"
#include "xor_design.h"

namespace mupir {
namespace {

int64_t ExpectedMultiplicity(Generator mode, int s, int S, int N, int k) {
  switch (mode) {
    case Generator::kAlg1:
      return ToInt64(Phi(s, S, k));
    case Generator::kQSet1:
      return ToInt64(Psi(s, S, N, k));
    case Generator::kQSet2:
      return ToInt64(k * Phi(s, S, k));
  }
  return 0;
}

std::string TypeString(const std::vector<int>& type) {
  std::string out = "{";
  for (size_t n = 0; n < type.size(); ++n) {
    if (n) out += ",";
    out += std::to_string(type[n]);
  }
  return out + "}";
}

class BlockAuditor {
 public:
  BlockAuditor(AuditReport& report, int slot, Generator mode, int S, int N)
      : report_(report), slot_(slot), mode_(mode), S_(S), N_(N) {}

  void Run(const std::vector<std::vector<const Query*>>& per_db) {
    for (int s = 1; s <= S_; ++s) AuditDb(s, per_db[s - 1]);
  }

 private:
  void Fail(const std::string& what) {
    if (report_.ok) {
      report_.ok = false;
      report_.first_failure = "slot " + std::to_string(slot_) + " (" +
                              GeneratorName(mode_) + "): " + what;
    }
  }

  // Files referenced by the query, one entry per term, plus each term's
  // subsubfile. Reports malformed queries.
  bool Terms(const Query& q, int s, std::vector<std::pair<int, int>>& terms) {
    const std::string where = "db " + std::to_string(s) + " query " +
                              ToString(q) + ": ";
    if (q.atoms.empty()) {
      Fail(where + "empty query");
      return false;
    }
    if (mode_ == Generator::kQSet2) {
      if (q.atoms.size() % 2 != 0) {
        Fail(where + "omega terms must come in pairs");
        return false;
      }
      for (size_t n = 0; n < q.atoms.size(); n += 2) {
        const Atom& a = q.atoms[n];
        const Atom& b = q.atoms[n + 1];
        if (a.file != b.file || a.subsub != b.subsub || a.subfile == b.subfile) {
          Fail(where + "malformed omega pair");
          return false;
        }
        const std::pair<int, int> pair = std::minmax(a.subfile, b.subfile);
        auto [it, inserted] = omega_pairs_.emplace(a.file, pair);
        if (!inserted && it->second != pair) {
          Fail(where + "file " + std::to_string(a.file) +
               " uses two different omega pairs");
          return false;
        }
        terms.emplace_back(a.file, a.subsub);
      }
    } else {
      for (const Atom& a : q.atoms) {
        if (subfile_ == 0) subfile_ = a.subfile;
        if (mode_ == Generator::kQSet1 && a.subfile != subfile_) {
          Fail(where + "mixes subfiles within one block");
          return false;
        }
        terms.emplace_back(a.file, a.subsub);
      }
    }
    std::set<int> files;
    for (const auto& [file, subsub] : terms) {
      if (file < 1 || file > N_) {
        Fail(where + "file index out of range");
        return false;
      }
      if (!files.insert(file).second) {
        Fail(where + "file " + std::to_string(file) + " appears twice");
        return false;
      }
    }
    return true;
  }

  void AuditDb(int s, const std::vector<const Query*>& queries) {
    std::map<std::vector<int>, int64_t> counts;
    std::vector<int64_t> refs(N_ + 1, 0);
    std::vector<std::map<int, int>> uses(N_ + 1);
    std::set<Atom> seen_atoms;
    for (const Query* q : queries) {
      std::vector<std::pair<int, int>> terms;
      if (!Terms(*q, s, terms)) continue;
      std::vector<int> type;
      for (const auto& [file, subsub] : terms) {
        type.push_back(file);
        ++refs[file];
        ++uses[file][subsub];
      }
      std::sort(type.begin(), type.end());
      ++counts[type];
      if (mode_ == Generator::kAlg1) {
        for (const Atom& a : q->atoms) {
          if (!seen_atoms.insert(a).second) {
            Fail("db " + std::to_string(s) + ": " + ToString(a) +
                 " repeats within the database");
          }
        }
      }
    }

    int64_t expected_refs = 0;
    for (int k = 1; k <= N_; ++k) {
      const int64_t want = ExpectedMultiplicity(mode_, s, S_, N_, k);
      expected_refs += ToInt64(Binomial(N_ - 1, k - 1)) * want;
      for (const auto& type : internal::Subsets(N_, k)) {
        auto it = counts.find(type);
        const int64_t got = it == counts.end() ? 0 : it->second;
        report_.cells.push_back({slot_, s, k, type, got, want});
        if (got != want) {
          Fail("db " + std::to_string(s) + ", k=" + std::to_string(k) +
               ", type " + TypeString(type) + ": count " + std::to_string(got) +
               ", expected " + std::to_string(want));
        }
      }
    }
    for (int i = 1; i <= N_; ++i) {
      report_.file_refs.push_back({slot_, s, i, refs[i], expected_refs});
      if (refs[i] != expected_refs) {
        Fail("db " + std::to_string(s) + ", file " + std::to_string(i) +
             ": " + std::to_string(refs[i]) + " references, expected " +
             std::to_string(expected_refs));
      }
    }

    std::vector<int> first;
    for (int i = 1; i <= N_; ++i) {
      RepetitionProfile p{slot_, s, i, {}};
      for (const auto& [subsub, n] : uses[i]) p.counts.push_back(n);
      std::sort(p.counts.begin(), p.counts.end());
      if (i == 1) {
        first = p.counts;
      } else if (p.counts != first) {
        report_.profiles_symmetric = false;
      }
      report_.profiles.push_back(std::move(p));
    }
  }

  AuditReport& report_;
  int slot_;
  Generator mode_;
  int S_;
  int N_;
  int subfile_ = 0;
  std::map<int, std::pair<int, int>> omega_pairs_;
};

void RequireShape(const QueryBundle& bundle, int S, int N) {
  Require(S >= 2 && N >= 1, ErrorCode::kInvalidDimension,
          "need S >= 2 and N >= 1");
  bundle.Validate();
  Require(bundle.S() == S, ErrorCode::kInvalidDimension,
          "bundle has " + std::to_string(bundle.S()) + " databases, expected " +
              std::to_string(S));
}

}  // namespace

AuditReport CheckStructure(const QueryBundle& bundle, int S, int N) {
  RequireShape(bundle, S, N);
  std::map<std::pair<int, Generator>, std::vector<std::vector<const Query*>>>
      blocks;
  for (int s = 0; s < S; ++s) {
    for (size_t n = 0; n < bundle.per_db[s].size(); ++n) {
      const Provenance& p = bundle.provenance[s][n];
      auto& block = blocks[{p.slot, p.generator}];
      block.resize(S);
      block[s].push_back(&bundle.per_db[s][n]);
    }
  }
  AuditReport report;
  report.total_queries = bundle.TotalQueries();
  for (const auto& [key, per_db] : blocks) {
    BlockAuditor(report, key.first, key.second, S, N).Run(per_db);
  }
  return report;
}

AuditReport CheckStructure(const QueryBundle& bundle, int S, int N,
                           Generator mode) {
  RequireShape(bundle, S, N);
  std::vector<std::vector<const Query*>> per_db(S);
  for (int s = 0; s < S; ++s) {
    for (const Query& q : bundle.per_db[s]) per_db[s].push_back(&q);
  }
  AuditReport report;
  report.total_queries = bundle.TotalQueries();
  BlockAuditor(report, 0, mode, S, N).Run(per_db);
  return report;
}

Rational CountRate(const QueryBundle& bundle, int S, int N, int K) {
  Require(K >= 1, ErrorCode::kInvalidDimension, "need K >= 1");
  return Rational(BigInt(bundle.TotalQueries()),
                  BigInt(K) * Subpacketization(S, N));
}

// ---------------------------------------------------------------------------

namespace {

// Odometer over a list of option counts.
bool Advance(std::vector<size_t>& idx, const std::vector<size_t>& sizes) {
  for (size_t n = idx.size(); n-- > 0;) {
    if (++idx[n] < sizes[n]) return true;
    idx[n] = 0;
  }
  return false;
}

void Accumulate(std::vector<KeyDistribution>& dist,
                const std::vector<std::vector<Query>>& per_db,
                const Rational& weight) {
  for (size_t s = 0; s < per_db.size(); ++s) {
    dist[s][CanonicalDbKey(per_db[s])] += weight;
  }
}

void Compare(DistributionVerdict& v) {
  v.equal = true;
  for (size_t n = 1; n < v.distributions.size() && v.equal; ++n) {
    for (size_t s = 0; s < v.distributions[n].size(); ++s) {
      if (v.distributions[n][s] != v.distributions[0][s]) {
        v.equal = false;
        v.first_difference = "db " + std::to_string(s + 1) + ": demand " +
                             v.demands[0].ToString() + " vs " +
                             v.demands[n].ToString() + " (" +
                             std::to_string(v.distributions[0][s].size()) +
                             " vs " +
                             std::to_string(v.distributions[n][s].size()) +
                             " distinct keys)";
        break;
      }
    }
  }
}

void Guard(const BigInt& total) {
  Require(total <= kOracleLimit, ErrorCode::kTooLarge,
          "oracle would enumerate " + total.str() + " assignments (limit " +
              std::to_string(kOracleLimit) + ")");
}

DistributionVerdict SingleOracle(int S, int N) {
  Require(S >= 2 && N >= 1, ErrorCode::kInvalidDimension,
          "need S >= 2 and N >= 1");
  const int sub = Subpacketization(S, N);
  BigInt per_demand = 1;
  BigInt fact = 1;
  for (int n = 2; n <= sub; ++n) fact *= n;
  for (int i = 0; i < N; ++i) per_demand *= fact;
  Guard(per_demand * N);

  DistributionVerdict v;
  v.scheme = Scheme::kSingle;
  v.S = S;
  v.N = N;
  v.K = 1;
  const std::vector<Permutation> all = EnumeratePermutations(sub);
  const Rational weight(BigInt(1), per_demand);
  for (int d = 1; d <= N; ++d) {
    v.demands.push_back(DemandVector({d}));
    std::vector<KeyDistribution> dist(S);
    std::vector<size_t> idx(N, 0);
    const std::vector<size_t> sizes(N, all.size());
    do {
      std::vector<Permutation> perms;
      for (size_t n : idx) perms.push_back(all[n]);
      Accumulate(dist, RunAlg1(S, N, perms, d).per_db, weight);
      ++v.assignments;
    } while (Advance(idx, sizes));
    v.distributions.push_back(std::move(dist));
  }
  Compare(v);
  return v;
}

std::vector<int> LowestBaseOf(const DemandVector& demand, int N) {
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

DistributionVerdict MupirOracle(int S, int N, int K, BasePolicy policy) {
  Require(S >= 2 && N >= 2 && K >= N, ErrorCode::kUnsupportedRegime,
          "multi-user oracle needs S >= 2 and 2 <= N <= K");
  const int sub = Subpacketization(S, N);
  const int H = static_cast<int>(ToInt64(HValue(S, N)));
  const std::vector<Permutation> free_perms = EnumeratePermutations(sub);
  const std::vector<Permutation> fixed_perms = EnumeratePermutations(sub, H);
  const std::vector<Permutation> user_perms = EnumeratePermutations(K);

  struct Plan {
    DemandVector demand;
    std::vector<BaseAssignment> assignments;
  };
  std::vector<Plan> plans;
  BigInt total = 0;
  const int qset1_slots = N == K ? K : N;
  BigInt per_assignment = BigInt(user_perms.size());
  for (int n = 0; n < qset1_slots; ++n) {
    per_assignment *= BigInt(fixed_perms.size());
    for (int i = 1; i < N; ++i) per_assignment *= BigInt(free_perms.size());
  }
  for (int n = 0; n < K - qset1_slots; ++n) {
    for (int i = 0; i < N; ++i) per_assignment *= BigInt(free_perms.size());
  }
  for (const DemandVector& demand : DemandVector::EnumerateValid(N, K)) {
    Plan plan{demand, {}};
    if (N == K) {
      plan.assignments.push_back({});
    } else {
      for (BaseAssignment& a : EnumerateBaseAndRho(demand, N)) {
        if (policy == BasePolicy::kLowestBase &&
            a.base != LowestBaseOf(demand, N)) {
          continue;
        }
        plan.assignments.push_back(std::move(a));
      }
    }
    total += per_assignment * plan.assignments.size();
    plans.push_back(std::move(plan));
  }
  Guard(total);

  DistributionVerdict v;
  v.scheme = Scheme::kMupir;
  v.S = S;
  v.N = N;
  v.K = K;
  v.policy = policy;
  for (const Plan& plan : plans) {
    const DemandVector& demand = plan.demand;
    v.demands.push_back(demand);
    std::vector<KeyDistribution> dist(S);
    const Rational weight(
        BigInt(1), per_assignment * BigInt(plan.assignments.size()));
    for (const BaseAssignment& a : plan.assignments) {
      auto is_qset1 = [&](int u) {
        return N == K ||
               std::binary_search(a.base.begin(), a.base.end(), u);
      };
      // Option lists per (user, file), flattened user-major.
      std::vector<const std::vector<Permutation>*> options;
      for (int u = 1; u <= K; ++u) {
        for (int i = 1; i <= N; ++i) {
          options.push_back(is_qset1(u) && i == demand[u] ? &fixed_perms
                                                          : &free_perms);
        }
      }
      std::vector<size_t> sizes;
      for (const auto* o : options) sizes.push_back(o->size());

      for (const Permutation& P : user_perms) {
        std::vector<size_t> idx(options.size(), 0);
        do {
          std::vector<std::vector<Query>> per_db(S);
          for (int u = 1; u <= K; ++u) {
            std::vector<Permutation> perms;
            for (int i = 1; i <= N; ++i) {
              const size_t flat = (u - 1) * N + (i - 1);
              perms.push_back((*options[flat])[idx[flat]]);
            }
            GeneratedLists lists;
            if (is_qset1(u)) {
              lists = QSet1(S, N, P(u), perms, demand[u]);
            } else {
              OmegaPairs pairs;
              for (int i = 1; i <= N; ++i) {
                pairs.emplace_back(P(a.rho[u - 1][i - 1]), P(u));
              }
              lists = QSet2(S, N, pairs, perms);
            }
            for (int s = 0; s < S; ++s) {
              per_db[s].insert(per_db[s].end(), lists.per_db[s].begin(),
                               lists.per_db[s].end());
            }
          }
          Accumulate(dist, per_db, weight);
          ++v.assignments;
        } while (Advance(idx, sizes));
      }
    }
    v.distributions.push_back(std::move(dist));
  }
  Compare(v);
  return v;
}

}  // namespace

DistributionVerdict DemandDistributionOracle(int S, int N, int K,
                                             Scheme scheme,
                                             BasePolicy policy) {
  return scheme == Scheme::kSingle ? SingleOracle(S, N)
                                   : MupirOracle(S, N, K, policy);
}

// ---------------------------------------------------------------------------

const char* MutationKindName(MutationKind kind) {
  switch (kind) {
    case MutationKind::kDrop:
      return "drop";
    case MutationKind::kDuplicate:
      return "duplicate";
    case MutationKind::kRetarget:
      return "retarget";
  }
  return "unknown";
}

Mutation RandomMutation(const QueryBundle& bundle, int N, Rng& rng) {
  std::vector<int> dbs;
  for (int s = 0; s < bundle.S(); ++s) {
    if (!bundle.per_db[s].empty()) dbs.push_back(s + 1);
  }
  Require(!dbs.empty(), ErrorCode::kInvalidDimension, "bundle has no queries");
  Mutation m;
  m.kind = static_cast<MutationKind>(rng.Below(N >= 2 ? 3 : 2));
  m.db = dbs[rng.Below(dbs.size())];
  const auto& list = bundle.per_db[m.db - 1];
  m.position = static_cast<int>(rng.Below(list.size()));
  if (m.kind == MutationKind::kRetarget) {
    const Query& q = list[m.position];
    const bool paired =
        bundle.provenance[m.db - 1][m.position].generator == Generator::kQSet2;
    m.atom = paired ? 2 * static_cast<int>(rng.Below(q.atoms.size() / 2))
                    : static_cast<int>(rng.Below(q.atoms.size()));
    const int old = q.atoms[m.atom].file;
    m.new_file = static_cast<int>(rng.Below(N - 1)) + 1;
    if (m.new_file >= old) ++m.new_file;
  }
  return m;
}

QueryBundle ApplyMutation(const QueryBundle& bundle, const Mutation& m) {
  Require(m.db >= 1 && m.db <= bundle.S() && m.position >= 0 &&
              m.position < static_cast<int>(bundle.per_db[m.db - 1].size()),
          ErrorCode::kOutOfRange, "mutation target out of range");
  QueryBundle out = bundle;
  auto& list = out.per_db[m.db - 1];
  auto& prov = out.provenance[m.db - 1];
  switch (m.kind) {
    case MutationKind::kDrop:
      list.erase(list.begin() + m.position);
      prov.erase(prov.begin() + m.position);
      break;
    case MutationKind::kDuplicate:
      list.insert(list.begin() + m.position + 1, list[m.position]);
      prov.insert(prov.begin() + m.position + 1, prov[m.position]);
      break;
    case MutationKind::kRetarget: {
      Query& q = list[m.position];
      Require(m.atom >= 0 && m.atom < static_cast<int>(q.atoms.size()),
              ErrorCode::kOutOfRange, "mutation atom out of range");
      q.atoms[m.atom].file = m.new_file;
      if (prov[m.position].generator == Generator::kQSet2) {
        q.atoms[m.atom + 1].file = m.new_file;
      }
      break;
    }
  }
  return out;
}

}  // namespace mupir
