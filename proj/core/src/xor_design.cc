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

#include "xor_design.h"

#include <algorithm>
#include <string>

#include "mupir/error.h"

namespace mupir::internal {

std::vector<std::vector<int>> Subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int i = pos + 1; i < k; ++i) cur[i] = cur[i - 1] + 1;
  }
  return out;
}

namespace {

bool Contains(const std::vector<int>& set, int x) {
  return std::binary_search(set.begin(), set.end(), x);
}

// A stage query before reused positions are filled in.
struct Pending {
  int type = 0;  // index into the subset list
  int fresh_file = 0;
  int fresh_pos = 0;
};

}  // namespace

Design BuildDesign(const DesignSpec& spec) {
  const int S = spec.S;
  const int N = spec.N;
  Require(S >= 1 && N >= 1, ErrorCode::kInvalidDimension,
          "design needs S, N >= 1");

  Design out;
  out.per_db.resize(S);
  std::vector<int> t(N + 1, 1);
  // use_count[s][file][pos]: appearances of a position in database s.
  std::vector<std::vector<std::vector<int>>> use_count(
      S, std::vector<std::vector<int>>(N + 1, std::vector<int>(2, 0)));

  for (int i = 1; i <= N; ++i) {
    out.per_db[0].push_back({1, i, {{i, 1}}});
    use_count[0][i][1] = 1;
  }

  for (int k = 2; k <= N; ++k) {
    const std::vector<int> T = t;
    const std::vector<std::vector<int>> types = Subsets(N, k);
    for (int s = 1; s <= S; ++s) {
      std::vector<long long> avail(types.size(), spec.copies(s, k));
      std::vector<Pending> stage;
      for (int i = 1; i <= N; ++i) {
        // How often file i already used each type in this stage.
        std::vector<long long> used_by_i(types.size(), 0);
        const long long quota = spec.quota(s, i, k);
        for (long long unit = 0; unit < quota; ++unit) {
          int pick = -1;
          for (size_t u = 0; u < types.size(); ++u) {
            if (avail[u] == 0 || !Contains(types[u], i)) continue;
            if (pick < 0 || used_by_i[u] < used_by_i[pick]) pick = u;
          }
          if (pick >= 0) {
            --avail[pick];
            ++used_by_i[pick];
            stage.push_back({pick, i, ++t[i]});
            continue;
          }
          // Swap: hand an earlier query's fresh position to a new query of an
          // unused type and give that earlier query a fresh position of i.
          int u_type = -1;
          for (size_t u = 0; u < types.size(); ++u) {
            if (avail[u] > 0) {
              u_type = u;
              break;
            }
          }
          Require(u_type >= 0, ErrorCode::kInfeasibleSwap,
                  "no unused subset left at level " + std::to_string(k));
          Pending* host = nullptr;
          for (Pending& p : stage) {
            if (Contains(types[p.type], i) && p.fresh_file != i &&
                Contains(types[u_type], p.fresh_file)) {
              host = &p;
              break;
            }
          }
          Require(host != nullptr, ErrorCode::kInfeasibleSwap,
                  "no swap for file " + std::to_string(i) + " at level " +
                      std::to_string(k) + ", database " + std::to_string(s));
          Pending moved{u_type, host->fresh_file, host->fresh_pos};
          host->fresh_file = i;
          host->fresh_pos = ++t[i];
          --avail[u_type];
          stage.push_back(moved);
        }
      }
      for (long long a : avail) {
        Require(a == 0, ErrorCode::kUnresolvable,
                "subset collection not exhausted at level " +
                    std::to_string(k) + ", database " + std::to_string(s));
      }

      auto& counts = use_count[s - 1];
      for (int i = 1; i <= N; ++i) {
        counts[i].resize(std::max<size_t>(counts[i].size(), t[i] + 1), 0);
      }
      for (const Pending& p : stage) ++counts[p.fresh_file][p.fresh_pos];
      for (const Pending& p : stage) {
        DesignQuery q;
        q.level = k;
        q.fresh_file = p.fresh_file;
        q.terms.push_back({p.fresh_file, p.fresh_pos});
        for (int u : types[p.type]) {
          if (u == p.fresh_file) continue;
          int best = 1;
          for (int pos = 2; pos <= T[u]; ++pos) {
            if (counts[u][pos] < counts[u][best]) best = pos;
          }
          ++counts[u][best];
          q.terms.push_back({u, best});
        }
        out.per_db[s - 1].push_back(std::move(q));
      }
    }
  }
  out.exposed.assign(t.begin() + 1, t.end());
  return out;
}

}  // namespace mupir::internal
