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

#include "mupir/report.h"

#include <sstream>

#include <nlohmann/json.hpp>

#include "mupir/query.h"

namespace mupir {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kDigits = 6;

Json RationalJson(const Rational& r) {
  return Json{{"exact", r.ToString()}, {"decimal", r.ToDecimal(kDigits)}};
}

std::string BigString(const BigInt& v) { return v.str(); }

std::string Join(const std::vector<size_t>& values, char sep) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

const char* PolicyName(BasePolicy p) {
  return p == BasePolicy::kAllBaseSets ? "all-base-sets" : "lowest-base";
}

}  // namespace

std::string SessionReportJson(const SessionReport& r) {
  Json j;
  j["scheme"] = SchemeName(r.scheme);
  j["S"] = r.S;
  j["N"] = r.N;
  j["K"] = r.K;
  j["block_bytes"] = r.block_bytes;
  j["seed"] = r.seed;
  j["demand"] = r.demand.values();
  j["per_db_query_counts"] = r.per_db_query_counts;
  j["total_queries"] = r.total_queries;
  j["rate"] = RationalJson(r.rate);
  j["expected_rate"] = RationalJson(r.expected_rate);
  j["file_bytes"] = r.file_bytes;
  j["download_bytes"] = r.download_bytes;
  if (r.scheme == Scheme::kMupir) {
    j["cache_bytes_per_user"] = r.cache_bytes_per_user;
    j["cache_budget_ok"] = r.cache_budget_ok;
  }
  j["decode_ok"] = r.decode_ok;
  j["oracle_agrees"] = r.oracle_agrees;
  j["audit_ok"] = r.audit_ok;
  if (!r.decode_failure.empty()) j["decode_failure"] = r.decode_failure;
  if (!r.audit_failure.empty()) j["audit_failure"] = r.audit_failure;
  return j.dump(2) + "\n";
}

std::string SessionReportCsv(const SessionReport& r) {
  std::ostringstream out;
  out << "scheme,S,N,K,block_bytes,seed,demand,per_db_query_counts,"
         "total_queries,rate_exact,rate_dec,expected_rate_exact,decode_ok,"
         "oracle_agrees,audit_ok\n";
  std::vector<size_t> demand(r.demand.values().begin(), r.demand.values().end());
  out << SchemeName(r.scheme) << ',' << r.S << ',' << r.N << ',' << r.K << ','
      << r.block_bytes << ',' << r.seed << ',' << Join(demand, ' ') << ','
      << Join(r.per_db_query_counts, ' ') << ',' << r.total_queries << ','
      << r.rate.ToString() << ',' << r.rate.ToDecimal(kDigits) << ','
      << r.expected_rate.ToString() << ',' << std::boolalpha << r.decode_ok
      << ',' << r.oracle_agrees << ',' << r.audit_ok << '\n';
  return out.str();
}

std::string SweepCsv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n' << std::boolalpha;
  for (const SweepRow& r : rows) {
    out << r.S << ',' << r.N << ',' << r.K << ',' << BigString(r.q) << ','
        << BigString(r.H) << ',' << r.M.ToString() << ','
        << r.M.ToDecimal(kDigits) << ',' << r.rate.ToString() << ','
        << r.rate.ToDecimal(kDigits) << ',' << r.pd_rate.ToDecimal(kDigits)
        << ',' << r.margin.ToDecimal(kDigits) << ',' << r.lemma41 << ','
        << r.lemma43 << '\n';
  }
  return out.str();
}

std::string SweepJson(const std::vector<SweepRow>& rows) {
  Json arr = Json::array();
  for (const SweepRow& r : rows) {
    arr.push_back(Json{{"S", r.S},
                       {"N", r.N},
                       {"K", r.K},
                       {"q", BigString(r.q)},
                       {"H", BigString(r.H)},
                       {"M", RationalJson(r.M)},
                       {"rate", RationalJson(r.rate)},
                       {"pd_rate", RationalJson(r.pd_rate)},
                       {"margin", RationalJson(r.margin)},
                       {"positivity_ok", r.lemma41},
                       {"envelope_ok", r.lemma43},
                       {"chords_ok", r.chords}});
  }
  return arr.dump(2) + "\n";
}

std::string RatesJson(const SweepRow& row, const DominanceReport& dom) {
  Json j;
  j["S"] = row.S;
  j["N"] = row.N;
  j["K"] = row.K;
  j["q"] = BigString(row.q);
  j["H"] = BigString(row.H);
  j["M"] = RationalJson(row.M);
  j["rate"] = RationalJson(row.rate);
  j["pir_rate"] = RationalJson(PirRate(row.S, row.N));
  j["pd_rate"] = RationalJson(row.pd_rate);
  j["envelope_margin"] = RationalJson(dom.envelope_margin);
  j["positivity"] = RationalJson(dom.positivity);
  Json chords = Json::array();
  for (const Rational& m : dom.chord_margins) chords.push_back(RationalJson(m));
  j["chord_margins"] = chords;
  j["min_chord_margin"] = RationalJson(dom.min_chord_margin);
  j["positivity_ok"] = dom.positivity_ok;
  j["chords_ok"] = dom.chords_ok;
  j["envelope_ok"] = dom.envelope_ok;
  return j.dump(2) + "\n";
}

std::string AuditJson(const AuditReport& report, const Rational& rate,
                      const Rational& expected_rate) {
  Json j;
  j["ok"] = report.ok && rate == expected_rate;
  j["structure_ok"] = report.ok;
  if (!report.first_failure.empty()) j["first_failure"] = report.first_failure;
  j["total_queries"] = report.total_queries;
  j["rate"] = RationalJson(rate);
  j["expected_rate"] = RationalJson(expected_rate);
  j["profiles_symmetric"] = report.profiles_symmetric;
  Json cells = Json::array();
  for (const TypeCell& c : report.cells) {
    cells.push_back(Json{{"slot", c.slot},
                         {"db", c.db},
                         {"level", c.level},
                         {"type", c.type},
                         {"count", c.count},
                         {"expected", c.expected}});
  }
  j["type_cells"] = cells;
  Json refs = Json::array();
  for (const FileRefCount& f : report.file_refs) {
    refs.push_back(Json{{"slot", f.slot},
                        {"db", f.db},
                        {"file", f.file},
                        {"count", f.count},
                        {"expected", f.expected}});
  }
  j["file_refs"] = refs;
  return j.dump(2) + "\n";
}

std::string OracleJson(const DistributionVerdict& v) {
  Json j;
  j["scheme"] = SchemeName(v.scheme);
  j["S"] = v.S;
  j["N"] = v.N;
  j["K"] = v.K;
  if (v.scheme == Scheme::kMupir) j["policy"] = PolicyName(v.policy);
  j["assignments"] = v.assignments;
  j["demands"] = v.demands.size();
  j["equal"] = v.equal;
  if (!v.first_difference.empty()) j["first_difference"] = v.first_difference;
  Json support = Json::array();
  if (!v.distributions.empty()) {
    for (const KeyDistribution& db : v.distributions.front()) {
      support.push_back(db.size());
    }
  }
  j["support_sizes"] = support;
  return j.dump(2) + "\n";
}

}  // namespace mupir
