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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mupir/answer.h"
#include "mupir/audit.h"
#include "mupir/error.h"
#include "mupir/file_store.h"
#include "mupir/harness.h"
#include "mupir/mupir.h"
#include "mupir/report.h"
#include "mupir/scheme_params.h"
#include "mupir/single_user_pir.h"

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

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records the first failure; later ones only flip the verdict.
  void Check(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

// ---------------------------------------------------------------------------
// Criterion 5 grid, shared by criteria 5, 6 and 9.

struct GridSession {
  int S, N, K;
  uint64_t seed;
  DemandVector demand;
  QueryBundle bundle;
  bool decoded = true;
  bool oracle_agrees = true;
  std::string error;
};

std::vector<GridSession> RunGrid() {
  std::vector<GridSession> out;
  for (int S = 2; S <= 4; ++S) {
    for (int N = 2; N <= 3; ++N) {
      for (int K = N; K <= 6; ++K) {
        for (uint64_t seed = 0; seed < 20; ++seed) {
          GridSession g{S, N, K, seed, {}, {}};
          Rng demand_rng(seed * 7919 + static_cast<uint64_t>(S * 100 + N * 10 + K));
          g.demand = DemandVector::RandomValid(N, K, demand_rng);
          try {
            const MupirSession s = NewMupirSession(S, N, g.demand, seed);
            const FileStore store = FileStore::Build(N, K, S, 2, seed + 1);
            const PlacementResult placement =
                Placement(store, s.transcript.user_perm);
            const AnswerSet answers = AnswerBundle(store, s.bundle);
            for (int u = 1; u <= K; ++u) {
              const UserDecodeResult r = DecodeUser(
                  u, answers, s.bundle, s.transcript, placement.caches[u - 1]);
              g.decoded &= r.file == store.file(g.demand[u]);
              g.oracle_agrees &= r.oracle_agrees;
            }
            g.bundle = s.bundle;
          } catch (const Error& e) {
            g.decoded = false;
            g.oracle_agrees = false;
            g.error = e.what();
          }
          out.push_back(std::move(g));
        }
      }
    }
  }
  return out;
}

std::string Where(const GridSession& g) {
  std::ostringstream os;
  os << "(S,N,K)=(" << g.S << "," << g.N << "," << g.K << ") seed " << g.seed
     << " demand " << g.demand.ToString();
  return os.str();
}

// ---------------------------------------------------------------------------

Outcome ParameterGoldenValues() {
  Outcome o;
  o.Check(QValue(3, 3) == 23, "q(3,3) != 23");
  o.Check(HValue(3, 3) == 5, "H(3,3) != 5");
  o.Check(CacheFraction(3, 3, 3) == R(4, 27), "M(3,3,3) != 4/27");
  o.Check(CacheFraction(3, 3, 5) == R(4, 45), "M(3,3,5) != 4/45");
  if (o.pass) o.detail = "q=23 H=5 M(3,3,3)=4/27 M(3,3,5)=4/45";
  return o;
}

Outcome RateReproduction() {
  Outcome o;
  struct Case {
    int K;
    std::vector<int> theta;
    Rational rate;
    double pd_target;
  };
  const Case cases[] = {{3, {2, 1, 3}, R(23, 9), 2.769},
                        {5, {2, 3, 2, 1, 3}, R(41, 15), 2.926}};
  std::ostringstream summary;
  for (const Case& c : cases) {
    const Rational formula = ProposedRate(3, 3, c.K);
    o.Check(formula == c.rate, "proposed_rate(3,3," + std::to_string(c.K) +
                                   ") = " + formula.ToString());
    const MupirSession s = NewMupirSession(3, 3, DemandVector(c.theta), 42);
    const Rational measured = CountRate(s.bundle, 3, 3, c.K);
    o.Check(measured == c.rate, "measured rate " + measured.ToString() +
                                    " for K=" + std::to_string(c.K));
    const Rational pd = PdRate(3, 3, c.K, CacheFraction(3, 3, c.K));
    const double gap = std::fabs(pd.ToDouble() - c.pd_target);
    std::ostringstream pd_text;
    pd_text << "R_PD(3,3," << c.K << ") = " << pd.ToString() << " ~ "
            << pd.ToDecimal(4) << ", target " << c.pd_target << " (off by "
            << gap << ")";
    o.Check(gap <= 1e-3, pd_text.str());
    summary << "K=" << c.K << ": R=" << measured.ToString() << " R_PD~"
            << pd.ToDecimal(4) << "; ";
  }
  if (o.pass) o.detail = summary.str();
  return o;
}

Outcome SingleUserPir() {
  Outcome o;
  Rng rng(2024);
  for (int d = 1; d <= 3; ++d) {
    for (int draw = 0; draw < 50; ++draw) {
      std::vector<Permutation> perms;
      for (int i = 0; i < 3; ++i) perms.push_back(Permutation::Sample(16, rng));
      Rng emission(rng.Next());
      const SingleSession s = GenerateAlg1(4, 3, perms, d, &emission);
      o.Check(s.bundle.PerDbCounts() == std::vector<size_t>{6, 5, 5, 5},
              "per-database counts differ from 6/5/5/5 for d=" + std::to_string(d));
      o.Check(s.bundle.TotalQueries() == 21, "total != 21");
      o.Check(CountRate(s.bundle, 4, 3, 1) == R(21, 16), "rate != 21/16");
      const FileStore store = FileStore::Build(3, 1, 4, 4, rng.Next());
      try {
        const SingleDecodeResult r =
            DecodeSingle(AnswerBundle(store, s.bundle), s.bundle, s.transcript);
        o.Check(r.file == store.file(d), "decoded W_d differs, d=" + std::to_string(d));
      } catch (const Error& e) {
        o.Check(false, e.what());
      }
    }
  }
  if (o.pass) o.detail = "150 sessions: 21 queries (6/5/5/5), rate 21/16, bit-exact";
  return o;
}

Outcome CountingIdentities() {
  Outcome o;
  int checks = 0;
  for (int S = 2; S <= 6; ++S) {
    for (int N = 2; N <= 6; ++N) {
      const std::string at = " at S=" + std::to_string(S) + " N=" + std::to_string(N);
      const BigInt sub = Pow(S, N - 1);
      BigInt per_file = 0, all_types = 0;
      for (int k = 1; k <= N; ++k) {
        for (int s = 1; s <= S; ++s) {
          per_file += Binomial(N - 1, k - 1) * Phi(s, S, k);
          all_types += Binomial(N, k) * Phi(s, S, k);
        }
      }
      o.Check(per_file == sub, "sum C(N-1,k-1) phi != S^(N-1)" + at);
      o.Check(all_types == (Pow(S, N) - 1) / (S - 1), "sum C(N,k) phi" + at);
      checks += 2;
      for (int d = 1; d <= N; ++d) {
        for (int k = 1; k <= N; ++k) {
          for (int s = 1; s <= S; ++s) {
            BigInt row = 0;
            for (int i = 1; i <= N; ++i) row += FreshQuota(s, i, d, k, S, N);
            o.Check(row == Binomial(N, k) * Psi(s, S, N, k), "sum_i F" + at);
            ++checks;
          }
        }
        for (int i = 1; i <= N; ++i) {
          BigInt total = 0;
          for (int k = 1; k <= N; ++k) {
            for (int s = 1; s <= S; ++s) total += FreshQuota(s, i, d, k, S, N);
          }
          o.Check(total == (i == d ? HValue(S, N) : sub), "sum_k,s F" + at);
          ++checks;
        }
      }
    }
  }
  for (int N = 2; N <= 10; ++N) {
    o.Check(QValue(2, N) == N * Pow(2, N - 1) - 1, "q(2,N) closed form");
    ++checks;
  }
  for (int S = 2; S <= 10; ++S) {
    o.Check(QValue(S, 2) == S + 1, "q(S,2) closed form");
    ++checks;
  }
  if (o.pass) o.detail = std::to_string(checks) + " exact identities";
  return o;
}

Outcome EndToEndDecode(const std::vector<GridSession>& grid) {
  Outcome o;
  for (const GridSession& g : grid) {
    o.Check(g.decoded, "decode failed " + Where(g) + " " + g.error);
    o.Check(g.oracle_agrees, "GF(2) oracle disagrees " + Where(g));
  }
  if (o.pass) {
    o.detail = std::to_string(grid.size()) +
               " sessions, every user bit-exact, peeling == GF(2) solver";
  }
  return o;
}

Outcome StructuralPrivacy(const std::vector<GridSession>& grid) {
  Outcome o;
  for (const GridSession& g : grid) {
    if (g.bundle.per_db.empty()) {
      o.Check(false, "no bundle " + Where(g));
      continue;
    }
    const AuditReport r = CheckStructure(g.bundle, g.S, g.N);
    o.Check(r.ok, "check_structure " + Where(g) + ": " + r.first_failure);
  }
  Rng rng(6);
  int detected = 0;
  const int mutations = 1000;
  for (int i = 0; i < mutations; ++i) {
    const GridSession& g = grid[rng.Below(grid.size())];
    const Mutation m = RandomMutation(g.bundle, g.N, rng);
    const AuditReport r = CheckStructure(ApplyMutation(g.bundle, m), g.S, g.N);
    if (!r.ok) {
      ++detected;
    } else {
      o.Check(false, std::string("undetected ") + MutationKindName(m.kind) +
                         " " + Where(g));
    }
  }
  if (o.pass) {
    o.detail = std::to_string(grid.size()) + " bundles pass, " +
               std::to_string(detected) + "/" + std::to_string(mutations) +
               " mutations detected";
  }
  return o;
}

Outcome DistributionalPrivacy() {
  Outcome o;
  const DistributionVerdict single = DemandDistributionOracle(2, 2, 1, Scheme::kSingle);
  o.Check(single.equal, "single (2,2): " + single.first_difference);
  const DistributionVerdict multi = DemandDistributionOracle(2, 2, 2, Scheme::kMupir);
  o.Check(multi.equal, "mupir (2,2,2): " + multi.first_difference);
  if (o.pass) {
    o.detail = "single (2,2) over " + std::to_string(single.assignments) +
               " assignments, mupir (2,2,2) over " +
               std::to_string(multi.assignments) + ": distributions equal";
  }
  return o;
}

Outcome DominanceLemmas() {
  Outcome o;
  int rows = 0;
  for (int S = 2; S <= 6; ++S) {
    for (int N = 2; N <= 6; ++N) {
      for (int K = N; K <= 8; ++K) {
        const DominanceReport r = RateDominanceCheck(S, N, K);
        const std::string at = " at (" + std::to_string(S) + "," +
                               std::to_string(N) + "," + std::to_string(K) + ")";
        o.Check(r.positivity_ok, "N S^(N-1) - q <= 0" + at);
        o.Check(r.chords_ok, "not strictly below every chord" + at);
        o.Check(r.envelope_ok, "R_PD - R <= 0" + at);
        ++rows;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(rows) + " triples, all margins > 0";
  return o;
}

Outcome QueryCountTheorems(const std::vector<GridSession>& grid) {
  Outcome o;
  for (const GridSession& g : grid) {
    const BigInt q = QValue(g.S, g.N);
    const BigInt expected =
        g.N == g.K ? g.K * q : g.N * q + g.N * (g.K - g.N) * Pow(g.S, g.N - 1);
    o.Check(BigInt(g.bundle.TotalQueries()) == expected,
            "|bundle| = " + std::to_string(g.bundle.TotalQueries()) +
                " != " + expected.str() + " " + Where(g));
  }
  if (o.pass) o.detail = std::to_string(grid.size()) + " bundles match K q / N q + N(K-N)S^(N-1)";
  return o;
}

Outcome Determinism() {
  Outcome o;
  const char* configs[] = {
      "scheme = mupir\nS = 3\nN = 3\nK = 5\nseed = 42\nblock_bytes = 4\n",
      "scheme = mupir\nS = 2\nN = 2\nK = 4\nseed = 7\ndemand = random-valid\n",
      "scheme = single\nS = 4\nN = 3\nseed = 1\n",
  };
  for (const char* text : configs) {
    const SessionConfig c = ParseConfig(text, "acceptance");
    const std::string first = SessionReportJson(RunSession(c));
    const std::string second = SessionReportJson(RunSession(c));
    o.Check(first == second, "JSON differs between runs for:\n" + std::string(text));
  }
  const SweepSpec spec{2, 4, 2, 4, 6};
  o.Check(SweepCsv(Sweep(spec)) == SweepCsv(Sweep(spec)), "sweep CSV differs");
  if (o.pass) o.detail = "3 session reports and a sweep table byte-identical";
  return o;
}

}  // namespace
}  // namespace mupir

int main() {
  using mupir::Outcome;
  const std::vector<mupir::GridSession> grid = mupir::RunGrid();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"parameter golden values", mupir::ParameterGoldenValues},
      {"rate reproduction", mupir::RateReproduction},
      {"single-user PIR", mupir::SingleUserPir},
      {"counting identities", mupir::CountingIdentities},
      {"end-to-end decode", [&] { return mupir::EndToEndDecode(grid); }},
      {"structural privacy", [&] { return mupir::StructuralPrivacy(grid); }},
      {"distributional privacy oracle", mupir::DistributionalPrivacy},
      {"dominance lemmas", mupir::DominanceLemmas},
      {"query-count theorems", [&] { return mupir::QueryCountTheorems(grid); }},
      {"determinism", mupir::Determinism},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
