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

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

#include "mupir/answer.h"
#include "mupir/error.h"
#include "mupir/file_store.h"
#include "mupir/mupir.h"
#include "mupir/report.h"
#include "mupir/scheme_params.h"
#include "mupir/single_user_pir.h"

namespace mupir {
namespace {

std::string_view Trim(std::string_view s) {
  const char* ws = " \t\r\n";
  const size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

[[noreturn]] void FieldError(const SessionConfig& c, const std::string& key,
                             const std::string& msg,
                             ErrorCode code = ErrorCode::kConfig) {
  auto it = c.lines.find(key);
  const std::string where =
      it == c.lines.end() ? c.source : c.source + ":" + std::to_string(it->second);
  Fail(code, where + ": field '" + key + "': " + msg);
}

template <typename T>
T ParseNumber(std::string_view text, const std::string& where) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  Require(ec == std::errc() && ptr == text.data() + text.size(),
          ErrorCode::kConfig,
          where + ": expected an integer, got '" + std::string(text) + "'");
  return value;
}

// "2.769547" or "-0.5" as an exact fraction.
Rational ParseDecimal(std::string_view text) {
  const size_t dot = text.find('.');
  if (dot == std::string_view::npos) return Rational::Parse(text);
  std::string digits(text.substr(0, dot));
  std::string frac(text.substr(dot + 1));
  BigInt den = 1;
  for (size_t i = 0; i < frac.size(); ++i) den *= 10;
  return Rational::Parse(digits + frac) / Rational(den);
}

std::string ReadFile(const std::string& path, const std::string& what) {
  std::ifstream in(path, std::ios::binary);
  Require(in.good(), ErrorCode::kConfig, "cannot open " + what + " '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

DemandVector ParseDemand(std::string_view text) {
  std::string s(Trim(text));
  if (!s.empty() && s.front() == '(' && s.back() == ')') {
    s = s.substr(1, s.size() - 2);
  }
  for (char& ch : s) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(s);
  std::vector<int> values;
  std::string tok;
  while (in >> tok) values.push_back(ParseNumber<int>(tok, "demand"));
  Require(!values.empty(), ErrorCode::kConfig, "demand: empty list");
  return DemandVector(std::move(values));
}

SessionConfig ParseConfig(std::string_view text, std::string_view source) {
  SessionConfig c;
  c.source = std::string(source);
  int line_no = 0;
  bool has_scheme = false;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;

    const std::string where = c.source + ":" + std::to_string(line_no);
    const size_t eq = line.find('=');
    Require(eq != std::string_view::npos, ErrorCode::kConfig,
            where + ": expected 'key = value'");
    const std::string key(Trim(line.substr(0, eq)));
    const std::string_view value = Trim(line.substr(eq + 1));
    Require(!key.empty(), ErrorCode::kConfig, where + ": missing key");
    const std::string field = where + ": field '" + key + "'";
    Require(!value.empty(), ErrorCode::kConfig, field + ": missing value");
    if (auto [it, fresh] = c.lines.emplace(key, line_no); !fresh) {
      Fail(ErrorCode::kConfig, field + ": duplicate (first set on line " +
                                   std::to_string(it->second) + ")");
    }

    if (key == "scheme") {
      if (value == "single") {
        c.scheme = Scheme::kSingle;
      } else if (value == "mupir") {
        c.scheme = Scheme::kMupir;
      } else {
        Fail(ErrorCode::kConfig, field + ": expected 'single' or 'mupir', got '" +
                                     std::string(value) + "'");
      }
      has_scheme = true;
    } else if (key == "S") {
      c.S = ParseNumber<int>(value, field);
    } else if (key == "N") {
      c.N = ParseNumber<int>(value, field);
    } else if (key == "K") {
      c.K = ParseNumber<int>(value, field);
    } else if (key == "block_bytes") {
      c.block_bytes = ParseNumber<int>(value, field);
    } else if (key == "seed") {
      c.seed = ParseNumber<uint64_t>(value, field);
    } else if (key == "demand") {
      if (value == "random-valid") {
        c.demand.reset();
      } else {
        try {
          c.demand = ParseDemand(value);
        } catch (const Error& e) {
          Fail(ErrorCode::kConfig, field + ": " + e.what());
        }
      }
    } else if (key == "input") {
      c.input_path = std::string(value);
    } else {
      Fail(ErrorCode::kConfig, field + ": unknown field");
    }
  }
  Require(has_scheme, ErrorCode::kConfig, c.source + ": missing field 'scheme'");
  for (const char* key : {"S", "N"}) {
    Require(c.lines.count(key) > 0, ErrorCode::kConfig,
            c.source + ": missing field '" + key + "'");
  }
  if (c.scheme == Scheme::kMupir) {
    Require(c.lines.count("K") > 0, ErrorCode::kConfig,
            c.source + ": missing field 'K'");
  }
  ValidateConfig(c);
  return c;
}

SessionConfig LoadConfig(const std::string& path) {
  return ParseConfig(ReadFile(path, "config"), path);
}

void ValidateConfig(const SessionConfig& c) {
  if (c.S < 2) FieldError(c, "S", "need S >= 2, got " + std::to_string(c.S));
  const int n_min = c.scheme == Scheme::kMupir ? 2 : 1;
  if (c.N < n_min) {
    FieldError(c, "N", "need N >= " + std::to_string(n_min) + ", got " +
                           std::to_string(c.N));
  }
  if (c.K < 1) FieldError(c, "K", "need K >= 1, got " + std::to_string(c.K));
  if (c.block_bytes < 1 || c.block_bytes > (1 << 20)) {
    FieldError(c, "block_bytes",
               "need 1 <= block_bytes <= 1048576, got " +
                   std::to_string(c.block_bytes));
  }
  try {
    Subpacketization(c.S, c.N);
  } catch (const Error& e) {
    FieldError(c, "N", e.what());
  }
  if (c.scheme == Scheme::kSingle) {
    if (c.K != 1) FieldError(c, "K", "the single-user scheme has K = 1");
    if (c.demand) {
      const DemandVector& d = *c.demand;
      if (d.K() != 1 || !d.InRange(c.N)) {
        FieldError(c, "demand", "expected one file index in [1, " +
                                    std::to_string(c.N) + "], got " +
                                    d.ToString(), ErrorCode::kInvalidDemand);
      }
    }
    return;
  }
  if (c.N > c.K) {
    FieldError(c, "K",
               "N=" + std::to_string(c.N) + " > K=" + std::to_string(c.K) +
                   " is outside the supported regime N <= K",
               ErrorCode::kUnsupportedRegime);
  }
  if (c.demand) {
    if (c.demand->K() != c.K) {
      FieldError(c, "demand", "expected " + std::to_string(c.K) +
                                  " entries, got " + c.demand->ToString(),
                 ErrorCode::kInvalidDemand);
    }
    try {
      c.demand->ValidateForScheme(c.N);
    } catch (const Error& e) {
      FieldError(c, "demand", e.what(), e.code());
    }
  }
}

namespace {

FileStore MakeStore(const SessionConfig& c) {
  if (c.input_path.empty()) {
    return FileStore::Build(c.N, c.K, c.S, c.block_bytes, c.seed);
  }
  const std::string raw = ReadFile(c.input_path, "input");
  try {
    return FileStore::FromBytes(
        c.N, c.K, c.S, c.block_bytes,
        std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(raw.data()),
                                 raw.size()));
  } catch (const Error& e) {
    FieldError(c, "input", e.what());
  }
}

// Demand draws use their own stream so they never shift session randomness.
Rng DemandRng(uint64_t seed) { return Rng(seed ^ 0x5851f42d4c957f2dULL); }

void FillCommon(SessionReport& r, const SessionConfig& c, const QueryBundle& b,
                const FileStore& store) {
  r.scheme = c.scheme;
  r.S = c.S;
  r.N = c.N;
  r.K = c.K;
  r.block_bytes = c.block_bytes;
  r.seed = c.seed;
  r.per_db_query_counts = b.PerDbCounts();
  r.total_queries = b.TotalQueries();
  r.file_bytes = store.file_bytes();
  r.download_bytes = static_cast<uint64_t>(r.total_queries) * c.block_bytes;
}

void Audit(SessionReport& r, const QueryBundle& bundle, bool replay_ok) {
  const AuditReport audit = CheckStructure(bundle, r.S, r.N);
  r.rate = CountRate(bundle, r.S, r.N, r.K);
  r.audit_ok = audit.ok && r.rate == r.expected_rate && replay_ok &&
               r.cache_budget_ok;
  if (!audit.ok) {
    r.audit_failure = audit.first_failure;
  } else if (r.rate != r.expected_rate) {
    r.audit_failure = "measured rate " + r.rate.ToString() + " != " +
                      r.expected_rate.ToString();
  } else if (!replay_ok) {
    r.audit_failure = "transcript replay does not reproduce the bundle";
  } else if (!r.cache_budget_ok) {
    r.audit_failure = "cache size differs from M L";
  }
}

SessionReport RunSingle(const SessionConfig& c) {
  int d = 0;
  if (c.demand) {
    d = (*c.demand)[1];
  } else {
    Rng rng = DemandRng(c.seed);
    d = static_cast<int>(rng.Below(c.N)) + 1;
  }
  const FileStore store = MakeStore(c);
  const SingleSession session = NewSingleSession(c.S, c.N, d, c.seed);
  const AnswerSet answers = AnswerBundle(store, session.bundle);

  SessionReport r;
  FillCommon(r, c, session.bundle, store);
  r.demand = DemandVector({d});
  r.expected_rate = PirRate(c.S, c.N);
  try {
    const SingleDecodeResult out =
        DecodeSingle(answers, session.bundle, session.transcript);
    r.oracle_agrees = out.oracle_agrees;
    r.decode_ok = out.file == store.file(d);
    if (!r.decode_ok) r.decode_failure = "decoded file differs from the store";
  } catch (const Error& e) {
    r.decode_failure = e.what();
  }
  Audit(r, session.bundle,
        ReplaySingleBundle(session.transcript) == session.bundle);
  return r;
}

SessionReport RunMupir(const SessionConfig& c) {
  DemandVector demand;
  if (c.demand) {
    demand = *c.demand;
  } else {
    Rng rng = DemandRng(c.seed);
    demand = DemandVector::RandomValid(c.N, c.K, rng);
  }
  const FileStore store = MakeStore(c);
  const MupirSession session = NewMupirSession(c.S, c.N, demand, c.seed);
  const PlacementResult placement =
      Placement(store, session.transcript.user_perm);
  const AnswerSet answers = AnswerBundle(store, session.bundle);

  SessionReport r;
  FillCommon(r, c, session.bundle, store);
  r.demand = demand;
  r.expected_rate = ProposedRate(c.S, c.N, c.K);
  const size_t lines = placement.caches[0].lines.size();
  r.cache_bytes_per_user = static_cast<uint64_t>(lines) * c.block_bytes;
  r.cache_budget_ok =
      Rational(BigInt(r.cache_bytes_per_user * 8)) ==
      CacheFraction(c.S, c.N, c.K) * Rational(BigInt(store.file_bits()));
  for (const CacheContent& cache : placement.caches) {
    r.cache_budget_ok &= cache.lines.size() == lines;
  }

  r.decode_ok = true;
  r.oracle_agrees = true;
  for (int u = 1; u <= c.K; ++u) {
    try {
      const UserDecodeResult out = DecodeUser(
          u, answers, session.bundle, session.transcript, placement.caches[u - 1]);
      r.oracle_agrees &= out.oracle_agrees;
      if (out.file != store.file(demand[u])) {
        r.decode_ok = false;
        if (r.decode_failure.empty()) {
          r.decode_failure = "user " + std::to_string(u) +
                             " decoded a file that differs from the store";
        }
      }
    } catch (const Error& e) {
      r.decode_ok = false;
      r.oracle_agrees = false;
      if (r.decode_failure.empty()) r.decode_failure = e.what();
    }
  }
  Audit(r, session.bundle,
        ReplayMupirBundle(session.transcript) == session.bundle);
  return r;
}

}  // namespace

SessionReport RunSession(const SessionConfig& config) {
  ValidateConfig(config);
  return config.scheme == Scheme::kSingle ? RunSingle(config)
                                          : RunMupir(config);
}

int ExitCodeFor(const SessionReport& report) {
  if (!report.decode_ok) return 3;
  if (!report.audit_ok) return 4;
  return 0;
}

// ---------------------------------------------------------------------------

SweepRow ComputeRow(int S, int N, int K) {
  const DominanceReport dom = RateDominanceCheck(S, N, K);
  SweepRow row;
  row.S = S;
  row.N = N;
  row.K = K;
  row.q = QValue(S, N);
  row.H = HValue(S, N);
  row.M = dom.memory;
  row.rate = dom.rate;
  row.pd_rate = dom.pd_rate;
  row.margin = dom.envelope_margin;
  row.lemma41 = dom.positivity_ok;
  row.lemma43 = dom.envelope_ok;
  row.chords = dom.chords_ok;
  return row;
}

std::vector<SweepRow> Sweep(const SweepSpec& spec) {
  Require(spec.s_min >= 2 && spec.s_min <= spec.s_max && spec.n_min >= 2 &&
              spec.n_min <= spec.n_max,
          ErrorCode::kConfig, "sweep ranges need 2 <= min <= max");
  std::vector<SweepRow> rows;
  for (int S = spec.s_min; S <= spec.s_max; ++S) {
    for (int N = spec.n_min; N <= spec.n_max; ++N) {
      for (int K = N; K <= spec.k_max; ++K) rows.push_back(ComputeRow(S, N, K));
    }
  }
  return rows;
}

std::vector<SweepRow> ParseSweepCsv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Require(std::getline(in, line) && Trim(line) == kSweepCsvHeader,
          ErrorCode::kConfig, "sweep csv: unexpected header");
  std::vector<SweepRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::vector<std::string> f;
    std::istringstream cells(std::string(Trim(line)));
    std::string cell;
    while (std::getline(cells, cell, ',')) f.push_back(cell);
    const std::string where = "sweep csv:" + std::to_string(line_no);
    Require(f.size() == 13, ErrorCode::kConfig, where + ": expected 13 columns");
    auto flag = [&](const std::string& v) {
      Require(v == "true" || v == "false", ErrorCode::kConfig,
              where + ": expected true/false, got '" + v + "'");
      return v == "true";
    };
    SweepRow row;
    row.S = ParseNumber<int>(f[0], where);
    row.N = ParseNumber<int>(f[1], where);
    row.K = ParseNumber<int>(f[2], where);
    row.q = Rational::Parse(f[3]).num();
    row.H = Rational::Parse(f[4]).num();
    row.M = Rational::Parse(f[5]);
    row.rate = Rational::Parse(f[7]);
    row.pd_rate = ParseDecimal(f[9]);
    row.margin = ParseDecimal(f[10]);
    row.lemma41 = flag(f[11]);
    row.lemma43 = flag(f[12]);
    rows.push_back(std::move(row));
  }
  return rows;
}

bool VerifyRow(const SweepRow& row) {
  const SweepRow fresh = ComputeRow(row.S, row.N, row.K);
  // Decimal columns carry 6 digits, so allow half a unit in the last place.
  const Rational tol(1, 2'000'000);
  auto close = [&](const Rational& a, const Rational& b) {
    const Rational diff = a - b;
    return diff <= tol && -diff <= tol;
  };
  return row.q == fresh.q && row.H == fresh.H && row.M == fresh.M &&
         row.rate == fresh.rate && close(row.pd_rate, fresh.pd_rate) &&
         close(row.margin, fresh.margin) && row.lemma41 == fresh.lemma41 &&
         row.lemma43 == fresh.lemma43;
}

}  // namespace mupir
