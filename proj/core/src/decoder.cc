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

#include <algorithm>
#include <deque>
#include <string>
#include <tuple>

#include "mupir/error.h"

namespace mupir {
namespace {

// A peeling variable: an atom, or an omega value (slot, file, subsub).
struct VarKey {
  bool omega = false;
  int a = 0;
  int b = 0;
  int c = 0;

  friend auto operator<=>(const VarKey&, const VarKey&) = default;
};

VarKey AtomVar(const Atom& atom) {
  return {false, atom.file, atom.subfile, atom.subsub};
}

VarKey OmegaKey(int slot, int file, int subsub) {
  return {true, slot, file, subsub};
}

enum class EqKind { kQuery, kQueryDiff, kQueryOmega, kCache, kPair };

struct Equation {
  EqKind kind = EqKind::kQuery;
  int db = 0;
  int position = 0;
  int ref_db = 0;
  int ref_position = 0;
  int cache_t = 0;
  std::vector<int> vars;
};

const OmegaPairs* SlotPairs(const DecodeContext& ctx, int slot) {
  auto it = ctx.omega_slots.find(slot);
  return it == ctx.omega_slots.end() ? nullptr : &it->second;
}

// The (file, subsub) groups of an omega query, in first-seen order.
std::vector<std::pair<int, int>> OmegaGroups(const Query& q) {
  std::vector<std::pair<int, int>> groups;
  for (const Atom& atom : q.atoms) {
    std::pair<int, int> g{atom.file, atom.subsub};
    if (std::find(groups.begin(), groups.end(), g) == groups.end()) {
      groups.push_back(g);
    }
  }
  return groups;
}

class System {
 public:
  explicit System(const DecodeContext& ctx) : ctx_(ctx) {
    Require(ctx.bundle != nullptr, ErrorCode::kInvalidDimension,
            "decode context has no bundle");
    const QueryBundle& bundle = *ctx.bundle;
    for (int s = 0; s < bundle.S(); ++s) {
      for (size_t n = 0; n < bundle.per_db[s].size(); ++n) {
        const Query& q = bundle.per_db[s][n];
        const Provenance& prov = bundle.provenance[s][n];
        Equation eq;
        eq.db = s + 1;
        eq.position = static_cast<int>(n);
        const OmegaPairs* pairs = prov.generator == Generator::kQSet2
                                      ? SlotPairs(ctx, prov.slot)
                                      : nullptr;
        if (pairs != nullptr) {
          eq.kind = EqKind::kQueryOmega;
          for (const auto& [file, subsub] : OmegaGroups(q)) {
            eq.vars.push_back(OmegaId(prov.slot, file, subsub, *pairs));
          }
        } else {
          eq.kind = EqKind::kQuery;
          for (const Atom& atom : q.atoms) eq.vars.push_back(Id(AtomVar(atom)));
        }
        Add(std::move(eq));
      }
    }
    AddDifferences();
    if (ctx.cache_subfile > 0) {
      for (int t = ctx.cache_first_t; t <= ctx.subpacketization; ++t) {
        Equation eq;
        eq.kind = EqKind::kCache;
        eq.cache_t = t;
        for (int i = 1; i <= ctx.N; ++i) {
          eq.vars.push_back(Id(AtomVar({i, ctx.cache_subfile, t})));
        }
        Add(std::move(eq));
      }
    }
  }

  int Find(const VarKey& key) const {
    auto it = ids_.find(key);
    return it == ids_.end() ? -1 : it->second;
  }

  const VarKey& key(int id) const { return keys_[id]; }
  const std::vector<Equation>& equations() const { return eqs_; }
  const std::vector<std::vector<int>>& uses() const { return uses_; }
  int size() const { return static_cast<int>(keys_.size()); }

  OmegaVar Omega(const VarKey& k) const {
    const auto& pair = (*SlotPairs(ctx_, k.a))[k.b - 1];
    return {k.a, k.b, k.c, pair.first, pair.second};
  }

 private:
  int Id(const VarKey& key) {
    auto [it, inserted] = ids_.emplace(key, static_cast<int>(keys_.size()));
    if (inserted) {
      keys_.push_back(key);
      uses_.emplace_back();
    }
    return it->second;
  }

  int OmegaId(int slot, int file, int subsub, const OmegaPairs& pairs) {
    const VarKey key = OmegaKey(slot, file, subsub);
    const bool fresh = ids_.find(key) == ids_.end();
    const int id = Id(key);
    if (fresh) {
      Require(file >= 1 && file <= static_cast<int>(pairs.size()),
              ErrorCode::kOutOfRange, "omega file out of range");
      Equation pair;
      pair.kind = EqKind::kPair;
      pair.vars = {id, Id(AtomVar({file, pairs[file - 1].first, subsub})),
                   Id(AtomVar({file, pairs[file - 1].second, subsub}))};
      Add(std::move(pair));
    }
    return id;
  }

  // For every atom query that extends another atom query by one atom, a
  // one-variable equation for that atom.
  void AddDifferences() {
    std::map<std::vector<int>, size_t> by_vars;
    for (size_t e = 0; e < eqs_.size(); ++e) {
      if (eqs_[e].kind != EqKind::kQuery) continue;
      std::vector<int> vars = eqs_[e].vars;
      std::sort(vars.begin(), vars.end());
      by_vars.emplace(std::move(vars), e);
    }
    const size_t n = eqs_.size();
    for (size_t e = 0; e < n; ++e) {
      if (eqs_[e].kind != EqKind::kQuery || eqs_[e].vars.size() < 2) continue;
      std::vector<int> vars = eqs_[e].vars;
      std::sort(vars.begin(), vars.end());
      for (size_t drop = 0; drop < vars.size(); ++drop) {
        std::vector<int> rest = vars;
        rest.erase(rest.begin() + drop);
        auto it = by_vars.find(rest);
        if (it == by_vars.end()) continue;
        Equation diff;
        diff.kind = EqKind::kQueryDiff;
        diff.db = eqs_[e].db;
        diff.position = eqs_[e].position;
        diff.ref_db = eqs_[it->second].db;
        diff.ref_position = eqs_[it->second].position;
        diff.vars = {vars[drop]};
        Add(std::move(diff));
      }
    }
  }

  void Add(Equation eq) {
    const int idx = static_cast<int>(eqs_.size());
    for (int v : eq.vars) uses_[v].push_back(idx);
    eqs_.push_back(std::move(eq));
  }

  const DecodeContext& ctx_;
  std::map<VarKey, int> ids_;
  std::vector<VarKey> keys_;
  std::vector<std::vector<int>> uses_;
  std::vector<Equation> eqs_;
};

Atom ToAtom(const VarKey& k) { return {k.a, k.b, k.c}; }

}  // namespace

const char* StepKindName(StepKind kind) {
  switch (kind) {
    case StepKind::kQueryAtom:
      return "query-atom";
    case StepKind::kQueryDiff:
      return "query-diff";
    case StepKind::kQueryOmega:
      return "query-omega";
    case StepKind::kCacheCombine:
      return "cache-combine";
    case StepKind::kPairSplit:
      return "pair-split";
    case StepKind::kOmegaJoin:
      return "omega-join";
  }
  return "unknown";
}

DecodePlan BuildDecodePlan(const DecodeContext& context, int user, int file,
                           int subfiles) {
  const System sys(context);
  const auto& eqs = sys.equations();
  std::vector<int> unknown(eqs.size());
  for (size_t e = 0; e < eqs.size(); ++e) {
    unknown[e] = static_cast<int>(eqs[e].vars.size());
  }
  std::vector<int> solved_by(sys.size(), -1);  // equation index
  std::vector<int> order;                      // variables in solve order
  std::deque<int> ready;
  for (size_t e = 0; e < eqs.size(); ++e) {
    if (unknown[e] == 1) ready.push_back(static_cast<int>(e));
  }
  std::vector<bool> known(sys.size(), false);
  while (!ready.empty()) {
    const int e = ready.front();
    ready.pop_front();
    if (unknown[e] != 1) continue;
    int var = -1;
    for (int v : eqs[e].vars) {
      if (!known[v]) var = v;
    }
    known[var] = true;
    solved_by[var] = e;
    order.push_back(var);
    for (int other : sys.uses()[var]) {
      if (--unknown[other] == 1) ready.push_back(other);
    }
  }

  // Keep only the steps the targets depend on.
  std::vector<bool> needed(sys.size(), false);
  std::vector<int> stack;
  for (int j = 1; j <= subfiles; ++j) {
    for (int x = 1; x <= context.subpacketization; ++x) {
      const Atom target{file, j, x};
      const int id = sys.Find(AtomVar(target));
      Require(id >= 0 && known[id], ErrorCode::kUnresolvable,
              "user " + std::to_string(user) + " cannot resolve " +
                  ToString(target));
      if (!needed[id]) {
        needed[id] = true;
        stack.push_back(id);
      }
    }
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int dep : eqs[solved_by[v]].vars) {
      if (!needed[dep]) {
        needed[dep] = true;
        stack.push_back(dep);
      }
    }
  }

  DecodePlan plan;
  plan.user = user;
  plan.file = file;
  for (int v : order) {
    if (!needed[v]) continue;
    const Equation& eq = eqs[solved_by[v]];
    const VarKey& k = sys.key(v);
    DecodeStep step;
    switch (eq.kind) {
      case EqKind::kQuery:
        step.kind = StepKind::kQueryAtom;
        step.db = eq.db;
        step.position = eq.position;
        step.target = ToAtom(k);
        break;
      case EqKind::kQueryDiff:
        step.kind = StepKind::kQueryDiff;
        step.db = eq.db;
        step.position = eq.position;
        step.ref_db = eq.ref_db;
        step.ref_position = eq.ref_position;
        step.target = ToAtom(k);
        break;
      case EqKind::kQueryOmega:
        step.kind = StepKind::kQueryOmega;
        step.db = eq.db;
        step.position = eq.position;
        step.omega = sys.Omega(k);
        break;
      case EqKind::kCache:
        step.kind = StepKind::kCacheCombine;
        step.cache_t = eq.cache_t;
        step.target = ToAtom(k);
        break;
      case EqKind::kPair:
        if (k.omega) {
          step.kind = StepKind::kOmegaJoin;
          step.omega = sys.Omega(k);
        } else {
          step.kind = StepKind::kPairSplit;
          step.omega = sys.Omega(sys.key(eq.vars[0]));
          step.target = ToAtom(k);
        }
        break;
    }
    plan.steps.push_back(step);
  }
  return plan;
}

std::vector<Block> ExecutePlan(const DecodePlan& plan,
                               const DecodeContext& context,
                               const AnswerSet& answers,
                               const std::vector<CacheLine>& cache,
                               int subfiles) {
  Require(context.bundle != nullptr, ErrorCode::kInvalidDimension,
          "decode context has no bundle");
  const QueryBundle& bundle = *context.bundle;
  std::map<Atom, Block> atoms;
  std::map<std::tuple<int, int, int>, Block> omegas;

  auto atom_value = [&](const Atom& a) -> const Block& {
    auto it = atoms.find(a);
    Require(it != atoms.end(), ErrorCode::kUnresolvable,
            "plan uses unresolved " + ToString(a));
    return it->second;
  };
  auto omega_value = [&](int slot, int file, int subsub) -> const Block& {
    auto it = omegas.find({slot, file, subsub});
    Require(it != omegas.end(), ErrorCode::kUnresolvable,
            "plan uses an unresolved omega value");
    return it->second;
  };
  auto answer_at = [&](int db, int position) -> const Block& {
    Require(db >= 1 && db <= static_cast<int>(answers.per_db.size()) &&
                position >= 0 &&
                position < static_cast<int>(answers.per_db[db - 1].size()),
            ErrorCode::kUnresolvable, "plan references a missing answer");
    return answers.per_db[db - 1][position];
  };
  auto answer = [&](const DecodeStep& step) -> const Block& {
    return answer_at(step.db, step.position);
  };

  for (const DecodeStep& step : plan.steps) {
    switch (step.kind) {
      case StepKind::kQueryAtom: {
        Block v = answer(step);
        for (const Atom& a : bundle.per_db[step.db - 1][step.position].atoms) {
          if (a != step.target) v ^= atom_value(a);
        }
        atoms[step.target] = std::move(v);
        break;
      }
      case StepKind::kQueryDiff:
        atoms[step.target] =
            answer(step) ^ answer_at(step.ref_db, step.ref_position);
        break;
      case StepKind::kQueryOmega: {
        Block v = answer(step);
        const Query& q = bundle.per_db[step.db - 1][step.position];
        const int slot = bundle.provenance[step.db - 1][step.position].slot;
        for (const auto& [file, subsub] : OmegaGroups(q)) {
          if (file == step.omega.file && subsub == step.omega.subsub) continue;
          v ^= omega_value(slot, file, subsub);
        }
        omegas[{step.omega.slot, step.omega.file, step.omega.subsub}] =
            std::move(v);
        break;
      }
      case StepKind::kCacheCombine: {
        auto it = std::find_if(cache.begin(), cache.end(), [&](const CacheLine& l) {
          return l.subfile == step.target.subfile && l.t == step.cache_t;
        });
        Require(it != cache.end(), ErrorCode::kUnresolvable,
                "plan references a missing cache line");
        Block v = it->value;
        for (int i = 1; i <= context.N; ++i) {
          if (i != step.target.file) v ^= atom_value({i, step.target.subfile, step.cache_t});
        }
        atoms[step.target] = std::move(v);
        break;
      }
      case StepKind::kPairSplit: {
        const OmegaVar& w = step.omega;
        const int other = step.target.subfile == w.subfile_a ? w.subfile_b
                                                             : w.subfile_a;
        atoms[step.target] = omega_value(w.slot, w.file, w.subsub) ^
                             atom_value({w.file, other, w.subsub});
        break;
      }
      case StepKind::kOmegaJoin: {
        const OmegaVar& w = step.omega;
        omegas[{w.slot, w.file, w.subsub}] =
            atom_value({w.file, w.subfile_a, w.subsub}) ^
            atom_value({w.file, w.subfile_b, w.subsub});
        break;
      }
    }
  }

  std::vector<Block> out;
  for (int j = 1; j <= subfiles; ++j) {
    for (int x = 1; x <= context.subpacketization; ++x) {
      out.push_back(atom_value({plan.file, j, x}));
    }
  }
  return out;
}

bool Gf2Result::AllDetermined() const {
  return std::all_of(values.begin(), values.end(),
                     [](const auto& v) { return v.has_value(); });
}

Gf2Result Gf2Solve(const std::vector<XorEquation>& equations,
                   const std::vector<Atom>& targets) {
  std::map<Atom, int> column;
  for (const XorEquation& eq : equations) {
    for (const Atom& a : eq.atoms) column.emplace(a, 0);
  }
  for (const Atom& a : targets) column.emplace(a, 0);
  int ncols = 0;
  for (auto& [atom, idx] : column) idx = ncols++;
  const size_t words = (ncols + 63) / 64;

  struct Row {
    std::vector<uint64_t> bits;
    Block value;
  };
  std::vector<Row> rows;
  for (const XorEquation& eq : equations) {
    Row r{std::vector<uint64_t>(words, 0), eq.value};
    for (const Atom& a : eq.atoms) {
      const int c = column[a];
      r.bits[c / 64] ^= uint64_t{1} << (c % 64);
    }
    rows.push_back(std::move(r));
  }
  auto bit = [](const Row& r, int c) { return (r.bits[c / 64] >> (c % 64)) & 1; };

  std::vector<int> pivot_row(ncols, -1);
  size_t rank = 0;
  for (int c = 0; c < ncols && rank < rows.size(); ++c) {
    size_t r = rank;
    while (r < rows.size() && !bit(rows[r], c)) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[rank], rows[r]);
    for (size_t o = 0; o < rows.size(); ++o) {
      if (o == rank || !bit(rows[o], c)) continue;
      for (size_t w = 0; w < words; ++w) rows[o].bits[w] ^= rows[rank].bits[w];
      rows[o].value ^= rows[rank].value;
    }
    pivot_row[c] = static_cast<int>(rank++);
  }

  Gf2Result result;
  for (size_t r = rank; r < rows.size(); ++r) {
    if (!rows[r].value.IsZero()) result.consistent = false;
  }
  for (const Atom& a : targets) {
    const int c = column[a];
    const int r = pivot_row[c];
    bool alone = r >= 0;
    for (size_t w = 0; alone && w < words; ++w) {
      uint64_t own = c / 64 == static_cast<int>(w) ? uint64_t{1} << (c % 64) : 0;
      alone = rows[r].bits[w] == own;
    }
    result.values.push_back(alone ? std::optional<Block>(rows[r].value)
                                  : std::nullopt);
  }
  return result;
}

std::vector<XorEquation> CollectEquations(const QueryBundle& bundle,
                                          const AnswerSet& answers,
                                          const std::vector<CacheLine>& cache,
                                          int N) {
  Require(answers.per_db.size() == bundle.per_db.size(),
          ErrorCode::kLengthMismatch, "answers do not match the bundle");
  std::vector<XorEquation> out;
  for (size_t s = 0; s < bundle.per_db.size(); ++s) {
    Require(answers.per_db[s].size() == bundle.per_db[s].size(),
            ErrorCode::kLengthMismatch, "answers do not match the bundle");
    for (size_t n = 0; n < bundle.per_db[s].size(); ++n) {
      out.push_back({bundle.per_db[s][n].atoms, answers.per_db[s][n]});
    }
  }
  for (const CacheLine& line : cache) {
    XorEquation eq{{}, line.value};
    for (int i = 1; i <= N; ++i) eq.atoms.push_back({i, line.subfile, line.t});
    out.push_back(std::move(eq));
  }
  return out;
}

}  // namespace mupir
