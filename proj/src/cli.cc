// Copyright 2026 The fmzv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fmzv/cli.h"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "fmzv/harmonic.h"
#include "fmzv/identity.h"
#include "fmzv/primes.h"
#include "fmzv/report.h"
#include "fmzv/scan.h"
#include "fmzv/series.h"

namespace fmzv {
namespace {

struct RunConfig {
  std::string command;
  std::optional<int64_t> p;
  uint32_t p_min = 3;
  uint32_t p_max = 100;
  std::optional<int> d, k, i, r;
  std::optional<int> k_min, k_max;
  std::optional<std::string> a, b;
  std::optional<int> K;
  int trials = 20;
  bool exhaustive_degree = false;
  std::string comp;
  std::string weights;
  bool star = false;
  bool both = false;
  uint64_t seed = kDefaultSeed;
  std::string format = "text";
  std::string out_path;
  unsigned threads = 0;
};

uint64_t ParseSeed(const std::string& text) {
  std::size_t used = 0;
  uint64_t v = 0;
  try {
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw InvalidParameters("malformed seed '" + text + "'");
  }
  return v;
}

template <typename T>
T Require(const std::optional<T>& v, const char* flag) {
  if (!v) throw InvalidParameters(std::string("missing required flag ") + flag);
  return *v;
}

PrimeModulus RequirePrime(const RunConfig& cfg) {
  const int64_t p = Require(cfg.p, "--p");
  if (p < 0) throw InvalidParameters("--p must be positive");
  return PrimeModulus(static_cast<uint64_t>(p));
}

int RequireInt(const std::optional<std::string>& v, const char* flag) {
  const std::string s = Require(v, flag);
  std::size_t used = 0;
  int out = 0;
  try {
    out = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw InvalidParameters(std::string(flag) + " expects an integer, got '" +
                            s + "'");
  }
  return out;
}

std::vector<RationalWeight> ParseWeightList(const std::string& text) {
  std::vector<RationalWeight> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(RationalWeight::Parse(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

SweepOptions Sweep(const RunConfig& cfg) {
  SweepOptions o;
  o.p_min = cfg.p_min;
  o.p_max = cfg.p_max;
  o.threads = cfg.threads;
  o.seed = cfg.seed;
  if (o.p_max > kMaxSievePrime) {
    throw InvalidParameters("--p-max must be <= " +
                            std::to_string(kMaxSievePrime));
  }
  if (o.p_max < o.p_min) throw InvalidParameters("--p-max < --p-min");
  return o;
}

VerifyOptions Verify(const RunConfig& cfg) {
  if (cfg.trials < 1) throw InvalidParameters("--trials must be >= 1");
  return VerifyOptions{cfg.trials, cfg.seed, cfg.exhaustive_degree};
}

// Number of compositions of k into d parts, saturating.
uint64_t CompositionCount(int k, int d) {
  if (d < 1 || k < d) return 0;
  uint64_t c = 1;
  for (int j = 1; j <= d - 1; ++j) {
    c = c * static_cast<uint64_t>(k - j) / static_cast<uint64_t>(j);
    if (c > 1'000'000) return c;
  }
  return c;
}

void AddScanConsistency(SweepReport& rep, const std::vector<RationalWeight>& lhs,
                        const std::vector<RationalWeight>* rhs, int k) {
  for (const auto& o : rep.observations) {
    for (auto& v : ConsistencyViolations(o)) rep.violations.push_back(v);
  }
  if (CompositionCount(k, static_cast<int>(lhs.size())) > 2000) return;
  for (const auto& o : rep.observations) {
    const bool star = o.statement.ends_with("-star");
    for (auto& v : OracleSpotCheck(o, lhs, rhs, k, star)) {
      rep.violations.push_back(v);
    }
  }
}

void FinishVerify(SweepReport& rep) {
  bool ok = rep.violations.empty();
  for (const auto& o : rep.observations) {
    ok = ok && o.PredictionHolds().value_or(true);
  }
  for (const auto& v : rep.identities) ok = ok && v.AllPassed();
  for (const auto& c : rep.checks) ok = ok && c.pass;
  rep.status = ok ? "pass" : "fail";
}

SweepReport RunVerify(const std::string& sub, const RunConfig& cfg) {
  SweepReport rep;
  rep.command = "verify " + sub;
  rep.seed = cfg.seed;
  if (sub == "theorem1") {
    const int d = Require(cfg.d, "--d");
    SweepOptions o = Sweep(cfg);
    if (cfg.p) {
      const PrimeModulus p = RequirePrime(cfg);
      if (p.value() <= static_cast<uint32_t>(d)) {
        throw InvalidParameters("theorem1 requires p > d");
      }
      o.p_min = o.p_max = p.value();
    }
    int k_min = cfg.k_min.value_or(d), k_max = cfg.k_max.value_or(30);
    if (cfg.k) k_min = k_max = *cfg.k;
    for (const auto& v : SweepWeightedSumFormula(d, k_min, k_max, cfg.i.value_or(0), o)) {
      rep.checks.push_back(ToCheckRecord(v));
    }
  } else if (sub == "mzv" || sub == "mzv-star") {
    const int d = Require(cfg.d, "--d"), k = Require(cfg.k, "--k");
    const SweepOptions o = Sweep(cfg);
    rep.observations.push_back(sub == "mzv"
                                   ? VerifyFiniteMzv(d, k, cfg.i.value_or(1), o)
                                   : VerifyFiniteMzvStar(d, k, cfg.i.value_or(1), o));
    for (auto& v : ConsistencyViolations(rep.observations.back())) {
      rep.violations.push_back(v);
    }
  } else if (sub == "lemma-fxx") {
    rep.identities.push_back(
        VerifyDiagonalF(RequirePrime(cfg), Require(cfg.d, "--d"), Verify(cfg)));
  } else if (sub == "translation") {
    rep.identities.push_back(VerifyTranslation(
        RequirePrime(cfg), Require(cfg.d, "--d"), Verify(cfg)));
  } else if (sub == "one-translation") {
    rep.identities.push_back(VerifyOneTranslation(
        RequirePrime(cfg), Require(cfg.d, "--d"), Require(cfg.i, "--i"),
        Verify(cfg)));
  } else if (sub == "gab-sab" || sub == "sab-gab" || sub == "induction" ||
             sub == "closed-form") {
    const PrimeModulus p = RequirePrime(cfg);
    const GabCase ab =
        GabCase::Make(RequireInt(cfg.a, "--a"), RequireInt(cfg.b, "--b"));
    const VerifyOptions vo = Verify(cfg);
    using Fn = VerdictList (*)(PrimeModulus, GabCase, const VerifyOptions&);
    static const std::map<std::string, Fn> kDispatch = {
        {"gab-sab", &VerifyGabSab},
        {"sab-gab", &VerifySabGab},
        {"induction", &VerifyInductionStep},
        {"closed-form", &VerifyMainClosedForm}};
    rep.identities.push_back(kDispatch.at(sub)(p, ab, vo));
  } else if (sub == "closed-form-series") {
    const PrimeModulus p = RequirePrime(cfg);
    const int d = Require(cfg.d, "--d"), i = Require(cfg.i, "--i");
    const int K = cfg.K.value_or(3 * static_cast<int>(p.value() - 1));
    if (K < 1) throw InvalidParameters("--K must be >= 1");
    const bool ok = VerifyClosedFormSeries(FpField(p), d, i, K);
    rep.checks.push_back(CheckRecord{"closed-form-series",
                                     {{"p", int64_t{p.value()}},
                                      {"d", int64_t{d}},
                                      {"i", int64_t{i}},
                                      {"K", int64_t{K}}},
                                     ok,
                                     ok ? "match" : "mismatch",
                                     "match"});
  } else if (sub == "antipode") {
    const PrimeModulus p = RequirePrime(cfg);
    const Composition c = Composition::Parse(cfg.comp);
    if (c.depth() < 1) throw InvalidParameters("--comp must be nonempty");
    const Fp v = AntipodeSum(FpField(p), c);
    rep.checks.push_back(CheckRecord{"antipode",
                                     {{"p", int64_t{p.value()}},
                                      {"comp", c.ToString()}},
                                     v.v == 0,
                                     std::to_string(v.v),
                                     "0"});
  } else {
    throw InvalidParameters("unknown verify subcommand '" + sub + "'");
  }
  FinishVerify(rep);
  return rep;
}

SweepReport RunScan(const std::string& sub, const RunConfig& cfg) {
  SweepReport rep;
  rep.command = "scan " + sub;
  rep.seed = cfg.seed;
  const SweepOptions o = Sweep(cfg);
  const int k = Require(cfg.k, "--k");
  if (k < 1) throw InvalidParameters("--k must be >= 1");
  std::vector<RationalWeight> lhs, rhs;
  bool difference = false;
  if (sub == "conj1" || sub == "conj2") {
    const int r = Require(cfg.r, "--r");
    lhs = sub == "conj1" ? Conjecture1Weights(r) : Conjecture2Weights(r);
    if (!cfg.weights.empty()) {
      lhs = ParseWeightList(cfg.weights);
      rep.observations = ScanWeights(sub, lhs, k, o);
      for (auto& ob : rep.observations) {
        ob.params.insert(ob.params.begin(), {"r", int64_t{r}});
        ob.notes.push_back("weights overridden on the command line");
      }
    } else {
      rep.observations = sub == "conj1" ? ScanConjecture1(r, k, o)
                                        : ScanConjecture2(r, k, o);
    }
  } else if (sub == "conj3") {
    const RationalWeight a = RationalWeight::Parse(Require(cfg.a, "--a"));
    const RationalWeight b = RationalWeight::Parse(Require(cfg.b, "--b"));
    const int r = Require(cfg.r, "--r");
    std::tie(lhs, rhs) = Conjecture3Weights(a, b, r);
    difference = true;
    rep.observations = ScanConjecture3(a, b, r, k, o);
  } else if (sub == "custom-weights") {
    if (cfg.weights.empty()) throw InvalidParameters("missing required flag --weights");
    lhs = ParseWeightList(cfg.weights);
    rep.observations = ScanWeights("custom", lhs, k, o);
  } else {
    throw InvalidParameters("unknown scan subcommand '" + sub + "'");
  }
  AddScanConsistency(rep, lhs, difference ? &rhs : nullptr, k);
  rep.status = rep.violations.empty() ? "report" : "fail";
  return rep;
}

int Emit(const SweepReport& rep, const RunConfig& cfg, std::ostream& out,
         std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << " for writing\n";
      return kExitUsage;
    }
    sink = &file;
  }
  if (cfg.format == "json") {
    *sink << ReportToJson(rep).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    WriteCsv(rep, *sink);
  } else {
    WriteText(rep, *sink);
  }
  for (const auto& v : rep.violations) err << "violation: " << v << "\n";
  return rep.status == "fail" ? kExitVerificationFailed : kExitOk;
}

void AddCommonOptions(CLI::App* app, RunConfig& cfg) {
  app->add_option("--seed", cfg.seed, "root seed (default: $FMZV_SEED or built-in)");
  app->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app->add_option("--out", cfg.out_path, "write json/csv/text to this path");
  app->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("FMZV_SEED"); env != nullptr && *env) {
    try {
      cfg.seed = ParseSeed(env);
    } catch (const InvalidParameters& e) {
      err << "error: FMZV_SEED: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Multiple harmonic sums modulo primes: weighted sum formula "
               "verification and conjecture scans",
               "fmzv"};
  app.require_subcommand(1);

  CLI::App* hsum = app.add_subcommand("hsum", "print H_p / H_p^* of a composition");
  hsum->add_option("--p", cfg.p, "odd prime")->required();
  hsum->add_option("--comp", cfg.comp, "composition, e.g. 1,2,1")->required();
  hsum->add_flag("--star", cfg.star, "print H_p^* instead of H_p");
  hsum->add_flag("--both", cfg.both, "print both sums");

  CLI::App* verify = app.add_subcommand("verify", "check a proven statement");
  verify->require_subcommand(1);
  CLI::App* scan = app.add_subcommand("scan", "sweep primes for a conjecture");
  scan->require_subcommand(1);

  const std::vector<std::string> verify_subs = {
      "theorem1",    "mzv",       "mzv-star",    "lemma-fxx",
      "translation", "gab-sab",   "one-translation", "sab-gab",
      "induction",   "closed-form", "closed-form-series", "antipode"};
  const std::vector<std::string> scan_subs = {"conj1", "conj2", "conj3",
                                              "custom-weights"};
  auto add_params = [&](CLI::App* s) {
    s->add_option("--p", cfg.p, "prime");
    s->add_option("--p-min", cfg.p_min, "smallest prime scanned");
    s->add_option("--p-max", cfg.p_max, "largest prime scanned");
    s->add_option("--d", cfg.d, "depth");
    s->add_option("--k", cfg.k, "weight");
    s->add_option("--k-min", cfg.k_min, "smallest weight");
    s->add_option("--k-max", cfg.k_max, "largest weight");
    s->add_option("--i", cfg.i, "slot of the doubled argument (1-based)");
    s->add_option("--r", cfg.r, "conjecture length parameter");
    s->add_option("--a", cfg.a, "integer a (identities) or rational a (scans)");
    s->add_option("--b", cfg.b, "integer b (identities) or rational b (scans)");
    s->add_option("--K", cfg.K, "series truncation order");
    s->add_option("--trials", cfg.trials, "random evaluation points");
    s->add_flag("--exhaustive-degree", cfg.exhaustive_degree,
                "sample degree-bound + 1 distinct points");
    s->add_option("--comp", cfg.comp, "composition, e.g. 1,2,1");
    s->add_option("--weights", cfg.weights, "explicit weight list, e.g. 1,1/2,3");
    AddCommonOptions(s, cfg);
  };
  for (const auto& name : verify_subs) {
    add_params(verify->add_subcommand(name));
  }
  for (const auto& name : scan_subs) {
    add_params(scan->add_subcommand(name));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (hsum->parsed()) {
      const PrimeModulus p = RequirePrime(cfg);
      const FpField f(p);
      const Composition c = Composition::Parse(cfg.comp);
      if (cfg.both) {
        out << "H=" << HarmonicSum(f, c).v << " H*=" << HarmonicStarSum(f, c).v
            << "\n";
      } else {
        out << (cfg.star ? HarmonicStarSum(f, c) : HarmonicSum(f, c)).v << "\n";
      }
      return kExitOk;
    }
    SweepReport rep;
    if (verify->parsed()) {
      rep = RunVerify(verify->get_subcommands().front()->get_name(), cfg);
    } else {
      rep = RunScan(scan->get_subcommands().front()->get_name(), cfg);
    }
    rep.threads = cfg.threads;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return Emit(rep, cfg, out, err);
  } catch (const InvalidParameters& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

}  // namespace fmzv
