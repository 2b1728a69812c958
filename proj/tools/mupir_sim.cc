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

// mupir_sim: run sessions, print rate tables and audit generated bundles.
//
//   mupir_sim pir   -S 3 -N 3 --demand 2 --seed 7
//   mupir_sim mupir -S 3 -N 3 -K 5 --demand 2,3,2,1,3 --format csv
//   mupir_sim rates -S 3 -N 3 -K 3
//   mupir_sim sweep --s-max 4 --k-max 6 --out sweep.csv --format csv
//   mupir_sim audit --oracle --scheme mupir -S 2 -N 2 -K 2
//
// Exit status: 0 success, 2 configuration error, 3 decode failure,
// 4 audit failure.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mupir/audit.h"
#include "mupir/error.h"
#include "mupir/harness.h"
#include "mupir/mupir.h"
#include "mupir/report.h"
#include "mupir/scheme_params.h"
#include "mupir/single_user_pir.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitDecode = 3;
constexpr int kExitAudit = 4;

struct CommonFlags {
  uint64_t seed = 0;
  std::string out;
  std::string format = "json";
};

void AddCommon(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--seed", flags->seed, "Random seed");
  cmd->add_option("--out", flags->out, "Write the report here instead of stdout");
  cmd->add_option("--format", flags->format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
}

void Emit(const CommonFlags& flags, const std::string& text) {
  if (flags.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(flags.out, std::ios::binary);
  mupir::Require(file.good(), mupir::ErrorCode::kConfig,
                 "cannot write '" + flags.out + "'");
  file << text;
}

struct SessionFlags {
  int S = 0;
  int N = 0;
  int K = 1;
  int block_bytes = 1;
  std::string demand;
  std::string input;
  std::string config;
};

// Values given on the command line win over the config file. Overridden
// lines are blanked so the remaining diagnostics keep their line numbers.
std::string MergeConfig(const std::string& text,
                        const std::map<std::string, std::string>& overrides) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    const size_t eq = line.find('=');
    std::string key = eq == std::string::npos ? "" : line.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    out << (overrides.count(key) ? "" : line) << '\n';
  }
  for (const auto& [key, value] : overrides) out << key << " = " << value << '\n';
  return out.str();
}

mupir::SessionConfig BuildConfig(CLI::App* cmd, mupir::Scheme scheme,
                                 const SessionFlags& f, const CommonFlags& c) {
  std::map<std::string, std::string> set;
  set["scheme"] = mupir::SchemeName(scheme);
  auto take = [&](const char* flag, const char* key, const std::string& v) {
    if (cmd->count(flag) > 0) set[key] = v;
  };
  take("-S", "S", std::to_string(f.S));
  take("-N", "N", std::to_string(f.N));
  if (scheme == mupir::Scheme::kMupir) take("-K", "K", std::to_string(f.K));
  take("--block-bytes", "block_bytes", std::to_string(f.block_bytes));
  take("--seed", "seed", std::to_string(c.seed));
  take("--demand", "demand", f.demand);
  take("--input", "input", f.input);

  if (f.config.empty()) {
    return mupir::ParseConfig(MergeConfig("", set), "<command line>");
  }
  std::ifstream file(f.config, std::ios::binary);
  mupir::Require(file.good(), mupir::ErrorCode::kConfig,
                 "cannot open config '" + f.config + "'");
  std::ostringstream text;
  text << file.rdbuf();
  return mupir::ParseConfig(MergeConfig(text.str(), set), f.config);
}

void AddSessionFlags(CLI::App* cmd, SessionFlags* f, bool multi_user) {
  cmd->add_option("-S,--databases", f->S, "Number of databases");
  cmd->add_option("-N,--files", f->N, "Number of files");
  if (multi_user) cmd->add_option("-K,--users", f->K, "Number of users");
  cmd->add_option("--block-bytes", f->block_bytes, "Bytes per subsubfile");
  cmd->add_option("--demand", f->demand,
                  multi_user ? "Demand vector, e.g. 2,1,3, or random-valid"
                             : "Demanded file index, or random-valid");
  cmd->add_option("--input", f->input,
                  "Raw library bytes (files concatenated) instead of random");
  cmd->add_option("--config", f->config, "Key-value config file");
}

int RunSessionCommand(CLI::App* cmd, mupir::Scheme scheme,
                      const SessionFlags& f, const CommonFlags& c) {
  const mupir::SessionConfig config = BuildConfig(cmd, scheme, f, c);
  const mupir::SessionReport report = mupir::RunSession(config);
  Emit(c, c.format == "csv" ? mupir::SessionReportCsv(report)
                            : mupir::SessionReportJson(report));
  return mupir::ExitCodeFor(report);
}

struct AuditFlags {
  bool structure = false;
  bool oracle = false;
  std::string scheme = "mupir";
  std::string policy = "all";
};

int RunAudit(CLI::App* cmd, const SessionFlags& f, const AuditFlags& a,
             const CommonFlags& c) {
  const mupir::Scheme scheme =
      a.scheme == "single" ? mupir::Scheme::kSingle : mupir::Scheme::kMupir;
  const bool structure = a.structure || !a.oracle;
  bool ok = true;
  std::string json_parts;
  std::string csv = "check,ok,detail\n";

  if (structure) {
    const mupir::SessionConfig config = BuildConfig(cmd, scheme, f, c);
    mupir::QueryBundle bundle;
    mupir::Rational expected;
    if (scheme == mupir::Scheme::kSingle) {
      mupir::Rng rng(c.seed ^ 0x5851f42d4c957f2dULL);
      const int d = config.demand ? (*config.demand)[1]
                                  : static_cast<int>(rng.Below(config.N)) + 1;
      bundle = mupir::NewSingleSession(config.S, config.N, d, c.seed).bundle;
      expected = mupir::PirRate(config.S, config.N);
    } else {
      mupir::Rng rng(c.seed ^ 0x5851f42d4c957f2dULL);
      const mupir::DemandVector demand =
          config.demand ? *config.demand
                        : mupir::DemandVector::RandomValid(config.N, config.K, rng);
      bundle = mupir::NewMupirSession(config.S, config.N, demand, c.seed).bundle;
      expected = mupir::ProposedRate(config.S, config.N, config.K);
    }
    const mupir::AuditReport report =
        mupir::CheckStructure(bundle, config.S, config.N);
    const mupir::Rational rate =
        mupir::CountRate(bundle, config.S, config.N, config.K);
    const bool structure_ok = report.ok && rate == expected;
    ok &= structure_ok;
    json_parts += "\"structure\": " + mupir::AuditJson(report, rate, expected);
    csv += std::string("structure,") + (structure_ok ? "true" : "false") + "," +
           (report.ok ? "rate " + rate.ToString() : report.first_failure) + "\n";
  }
  if (a.oracle) {
    mupir::Require(cmd->count("-S") > 0 && cmd->count("-N") > 0,
                   mupir::ErrorCode::kConfig, "--oracle needs -S and -N");
    const int K = scheme == mupir::Scheme::kSingle ? 1 : f.K;
    const mupir::BasePolicy policy = a.policy == "lowest"
                                         ? mupir::BasePolicy::kLowestBase
                                         : mupir::BasePolicy::kAllBaseSets;
    const mupir::DistributionVerdict verdict =
        mupir::DemandDistributionOracle(f.S, f.N, K, scheme, policy);
    ok &= verdict.equal;
    if (!json_parts.empty()) json_parts += ",\n";
    json_parts += "\"oracle\": " + mupir::OracleJson(verdict);
    csv += std::string("oracle,") + (verdict.equal ? "true" : "false") + "," +
           std::to_string(verdict.assignments) + " assignments\n";
  }
  Emit(c, c.format == "csv" ? csv : "{\n" + json_parts + "}\n");
  return ok ? 0 : kExitAudit;
}

int ExitCodeForError(const mupir::Error& e) {
  switch (e.code()) {
    case mupir::ErrorCode::kUnresolvable:
      return kExitDecode;
    case mupir::ErrorCode::kCoverage:
    case mupir::ErrorCode::kInfeasibleSwap:
      return kExitAudit;
    default:
      return kExitConfig;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-user private information retrieval simulator"};
  app.require_subcommand(1);

  CommonFlags common;
  SessionFlags session;
  AuditFlags audit;
  int rate_k = 0;
  mupir::SweepSpec sweep;

  CLI::App* pir = app.add_subcommand("pir", "Single-user session");
  AddSessionFlags(pir, &session, false);
  AddCommon(pir, &common);

  CLI::App* mu = app.add_subcommand("mupir", "Multi-user session with caches");
  AddSessionFlags(mu, &session, true);
  AddCommon(mu, &common);

  CLI::App* rates = app.add_subcommand("rates", "Scheme parameters for one triple");
  rates->add_option("-S,--databases", session.S)->required();
  rates->add_option("-N,--files", session.N)->required();
  rates->add_option("-K,--users", rate_k)->required();
  AddCommon(rates, &common);

  CLI::App* sw = app.add_subcommand("sweep", "Rate table over a grid");
  sw->add_option("--s-min", sweep.s_min);
  sw->add_option("--s-max", sweep.s_max);
  sw->add_option("--n-min", sweep.n_min);
  sw->add_option("--n-max", sweep.n_max);
  sw->add_option("--k-max", sweep.k_max);
  AddCommon(sw, &common);

  CLI::App* au = app.add_subcommand("audit", "Structural and distribution checks");
  AddSessionFlags(au, &session, true);
  au->add_flag("--structure", audit.structure, "Check one generated bundle");
  au->add_flag("--oracle", audit.oracle, "Exhaustive distribution comparison");
  au->add_option("--scheme", audit.scheme)->check(CLI::IsMember({"single", "mupir"}));
  au->add_option("--policy", audit.policy, "Oracle base-set policy")
      ->check(CLI::IsMember({"all", "lowest"}));
  AddCommon(au, &common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (pir->parsed()) {
      return RunSessionCommand(pir, mupir::Scheme::kSingle, session, common);
    }
    if (mu->parsed()) {
      return RunSessionCommand(mu, mupir::Scheme::kMupir, session, common);
    }
    if (rates->parsed()) {
      const mupir::SweepRow row = mupir::ComputeRow(session.S, session.N, rate_k);
      Emit(common, common.format == "csv"
                       ? mupir::SweepCsv({row})
                       : mupir::RatesJson(row, mupir::RateDominanceCheck(
                                                   session.S, session.N, rate_k)));
      return 0;
    }
    if (sw->parsed()) {
      const auto rows = mupir::Sweep(sweep);
      Emit(common, common.format == "csv" ? mupir::SweepCsv(rows)
                                          : mupir::SweepJson(rows));
      return 0;
    }
    return RunAudit(au, session, audit, common);
  } catch (const mupir::Error& e) {
    std::cerr << "mupir_sim: " << e.what() << '\n';
    return ExitCodeForError(e);
  }
}
