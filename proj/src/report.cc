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

#include "fmzv/report.h"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace fmzv {

CheckRecord ToCheckRecord(const FormulaVerdict& v) {
  return CheckRecord{"theorem1",
                     {{"p", int64_t{v.p}},
                      {"d", int64_t{v.d}},
                      {"k", int64_t{v.k}},
                      {"i", int64_t{v.i}}},
                     v.pass,
                     std::to_string(v.value.v),
                     std::to_string(v.expected.v)};
}

namespace {

Json ParamsToJson(const ParamList& params) {
  Json out = Json::object();
  for (const auto& [key, value] : params) {
    std::visit([&, &key = key](const auto& v) { out[key] = v; }, value);
  }
  return out;
}

std::string ParamsToString(const ParamList& params) {
  std::string s;
  for (const auto& [key, value] : params) {
    if (!s.empty()) s += " ";
    s += key + "=";
    if (auto* i = std::get_if<int64_t>(&value)) {
      s += std::to_string(*i);
    } else if (auto* str = std::get_if<std::string>(&value)) {
      s += *str;
    } else {
      const auto& list = std::get<std::vector<std::string>>(value);
      s += "(";
      for (std::size_t j = 0; j < list.size(); ++j) {
        if (j) s += ",";
        s += list[j];
      }
      s += ")";
    }
  }
  return s;
}

const char* PredictionName(Prediction p) {
  switch (p) {
    case Prediction::kExact:
      return "exact";
    case Prediction::kSubset:
      return "subset";
    case Prediction::kNone:
      break;
  }
  return "none";
}

Json CheckToJson(const CheckRecord& c) {
  Json j;
  j["statement"] = c.statement;
  j["params"] = ParamsToJson(c.params);
  j["pass"] = c.pass;
  j["value"] = c.value;
  j["expected"] = c.expected;
  return j;
}

Json VerdictListToJson(const VerdictList& v) {
  Json j;
  j["statement"] = v.identity;
  j["params"] = Json{{"p", v.p}, {"case", v.params}};
  j["seed"] = v.seed;
  j["evaluations"] = v.verdicts.size();
  j["failures"] = v.Failures();
  j["resamples"] = v.resamples;
  j["distinct_points"] = v.distinct_points;
  j["degree_bound"] = v.degree_bound;
  j["proof"] = v.proof;
  Json failed = Json::array();
  for (const auto& pv : v.verdicts) {
    if (pv.pass) continue;
    Json point = Json::array();
    for (Fp2 x : pv.point) point.push_back(FormatFp2(x));
    failed.push_back(Json{{"label", pv.label},
                          {"point", point},
                          {"lhs", FormatFp2(pv.lhs)},
                          {"rhs", FormatFp2(pv.rhs)}});
  }
  j["failed_points"] = failed;
  return j;
}

std::string JoinPrimes(const std::vector<uint32_t>& ps) {
  std::string s;
  for (std::size_t j = 0; j < ps.size(); ++j) {
    if (j) s += ";";
    s += std::to_string(ps[j]);
  }
  return s;
}

std::string CsvQuote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json ObservationToJson(const AdelicObservation& obs) {
  Json j;
  j["statement"] = obs.statement;
  j["params"] = ParamsToJson(obs.params);
  j["range"] = Json{{"p_min", obs.p_min}, {"p_max", obs.p_max}};
  j["scanned"] = obs.residues.size();
  j["exceptions"] = obs.Exceptions();
  j["skipped"] = obs.Skipped();
  Json reasons = Json::array();
  Json nonzero = Json::array();
  for (const auto& r : obs.residues) {
    if (r.cls == PrimeClass::kSkipped) {
      reasons.push_back(Json{{"p", r.p}, {"reason", r.skip_reason}});
    } else if (r.cls == PrimeClass::kException) {
      nonzero.push_back(Json{{"p", r.p}, {"value", r.value}});
    }
  }
  j["skip_reasons"] = reasons;
  j["residues_nonzero"] = nonzero;
  if (obs.prediction != Prediction::kNone) {
    j["prediction"] = PredictionName(obs.prediction);
    j["predicted_exceptions"] = obs.predicted_exceptions;
    j["prediction_holds"] = obs.PredictionHolds().value();
  }
  if (!obs.notes.empty()) j["notes"] = obs.notes;
  j["seed"] = obs.seed;
  return j;
}

Json ReportToJson(const SweepReport& report, bool with_metadata) {
  Json j;
  j["format"] = kReportFormat;
  j["command"] = report.command;
  j["status"] = report.status;
  j["seed"] = report.seed;
  Json obs = Json::array();
  for (const auto& o : report.observations) obs.push_back(ObservationToJson(o));
  j["observations"] = obs;
  Json ids = Json::array();
  for (const auto& v : report.identities) ids.push_back(VerdictListToJson(v));
  j["identities"] = ids;

  std::size_t failed = 0;
  for (const auto& c : report.checks) failed += c.pass ? 0 : 1;
  Json checks;
  checks["total"] = report.checks.size();
  checks["failed"] = failed;
  const bool inline_all = report.checks.size() <= kMaxInlineChecks;
  checks["truncated"] = !inline_all;
  Json records = Json::array();
  for (const auto& c : report.checks) {
    if (inline_all || !c.pass) records.push_back(CheckToJson(c));
  }
  checks["records"] = records;
  j["checks"] = checks;
  j["violations"] = report.violations;

  if (with_metadata) {
    Json meta;
    meta["elapsed_ms"] = report.elapsed_ms;
    meta["threads"] = report.threads;
    Json per = Json::array();
    for (const auto& o : report.observations) per.push_back(o.elapsed_ms);
    meta["observation_elapsed_ms"] = per;
    j["metadata"] = meta;
  }
  return j;
}

std::string ReportBody(const Json& report) {
  Json body = report;
  body.erase("metadata");
  return body.dump(2);
}

void WriteCsv(const SweepReport& report, std::ostream& out) {
  out << "statement,params,class,count,primes\n";
  for (const auto& o : report.observations) {
    const std::string params = CsvQuote(ParamsToString(o.params));
    for (PrimeClass cls :
         {PrimeClass::kZero, PrimeClass::kException, PrimeClass::kSkipped}) {
      std::vector<uint32_t> ps;
      for (const auto& r : o.residues) {
        if (r.cls == cls) ps.push_back(r.p);
      }
      out << o.statement << "," << params << "," << ToString(cls) << ","
          << ps.size() << "," << JoinPrimes(ps) << "\n";
    }
  }
  for (const auto& v : report.identities) {
    const std::string params =
        CsvQuote("p=" + std::to_string(v.p) + " " + v.params);
    const int failed = v.Failures();
    out << v.identity << "," << params << ",pass,"
        << v.verdicts.size() - failed << ",\n";
    out << v.identity << "," << params << ",fail," << failed << ",\n";
  }
  std::size_t failed = 0;
  for (const auto& c : report.checks) failed += c.pass ? 0 : 1;
  if (!report.checks.empty()) {
    const std::string& name = report.checks.front().statement;
    out << name << ",,pass," << report.checks.size() - failed << ",\n";
    out << name << ",,fail," << failed << ",\n";
  }
}

void WriteText(const SweepReport& report, std::ostream& out) {
  out << report.command << "  [" << report.status << "]  seed=" << report.seed
      << "\n";
  for (const auto& o : report.observations) {
    out << "\n" << o.statement << "  " << ParamsToString(o.params)
        << "  primes " << o.p_min << ".." << o.p_max << "\n";
    out << "  scanned     " << o.residues.size() << "\n";
    out << "  exceptions  {" << JoinPrimes(o.Exceptions()) << "}\n";
    out << "  skipped     {" << JoinPrimes(o.Skipped()) << "}\n";
    if (o.prediction != Prediction::kNone) {
      out << "  predicted   {" << JoinPrimes(o.predicted_exceptions) << "} ("
          << PredictionName(o.prediction) << ")  "
          << (o.PredictionHolds().value() ? "match" : "MISMATCH") << "\n";
    }
    for (const auto& r : o.residues) {
      if (r.cls == PrimeClass::kException) {
        out << "    p=" << std::setw(6) << std::left << r.p << " residue "
            << r.value << "\n";
      }
    }
    for (const auto& n : o.notes) out << "  note: " << n << "\n";
  }
  for (const auto& v : report.identities) {
    out << "\n" << v.identity << "  p=" << v.p << " " << v.params << "  "
        << v.verdicts.size() - v.Failures() << "/" << v.verdicts.size()
        << " evaluations agree";
    if (v.resamples) out << "  (" << v.resamples << " resamples)";
    if (v.proof) out << "  [exceeds degree bound " << v.degree_bound << "]";
    out << "\n";
    for (const auto& pv : v.verdicts) {
      if (pv.pass) continue;
      out << "    FAIL " << pv.label << " lhs=" << FormatFp2(pv.lhs)
          << " rhs=" << FormatFp2(pv.rhs) << "\n";
    }
  }
  if (!report.checks.empty()) {
    std::size_t failed = 0;
    for (const auto& c : report.checks) failed += c.pass ? 0 : 1;
    out << "\n" << report.checks.front().statement << "  "
        << report.checks.size() - failed << "/" << report.checks.size()
        << " checks pass\n";
    for (const auto& c : report.checks) {
      if (c.pass && report.checks.size() > 16) continue;
      out << "  " << (c.pass ? "ok  " : "FAIL") << " "
          << ParamsToString(c.params) << "  value=" << c.value
          << " expected=" << c.expected << "\n";
    }
  }
  for (const auto& v : report.violations) out << "VIOLATION: " << v << "\n";
}

std::vector<std::string> SchemaViolations(const Json& report) {
  std::vector<std::string> out;
  auto need = [&](const Json& j, const char* key, auto pred, const char* what,
                  const std::string& where) {
    if (!j.contains(key) || !pred(j.at(key))) {
      out.push_back(where + ": field '" + key + "' missing or not " + what);
      return false;
    }
    return true;
  };
  auto is_obj = [](const Json& j) { return j.is_object(); };
  auto is_arr = [](const Json& j) { return j.is_array(); };
  auto is_str = [](const Json& j) { return j.is_string(); };
  auto is_uint = [](const Json& j) { return j.is_number_unsigned(); };
  auto is_prime_list = [](const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& x : j) {
      if (!x.is_number_unsigned()) return false;
    }
    return true;
  };

  if (!report.is_object()) return {"report is not an object"};
  need(report, "format", is_str, "a string", "report");
  if (report.value("format", "") != kReportFormat) {
    out.push_back("report: unexpected format tag");
  }
  need(report, "command", is_str, "a string", "report");
  need(report, "status", is_str, "a string", "report");
  need(report, "seed", is_uint, "an unsigned integer", "report");
  need(report, "identities", is_arr, "an array", "report");
  need(report, "checks", is_obj, "an object", "report");
  need(report, "violations", is_arr, "an array", "report");
  if (!need(report, "observations", is_arr, "an array", "report")) return out;
  for (std::size_t n = 0; n < report["observations"].size(); ++n) {
    const Json& o = report["observations"][n];
    const std::string where = "observations[" + std::to_string(n) + "]";
    need(o, "statement", is_str, "a string", where);
    need(o, "params", is_obj, "an object", where);
    if (need(o, "range", is_obj, "an object", where)) {
      need(o["range"], "p_min", is_uint, "an unsigned integer", where + ".range");
      need(o["range"], "p_max", is_uint, "an unsigned integer", where + ".range");
    }
    need(o, "exceptions", is_prime_list, "a list of primes", where);
    need(o, "skipped", is_prime_list, "a list of primes", where);
    need(o, "seed", is_uint, "an unsigned integer", where);
    if (need(o, "residues_nonzero", is_arr, "an array", where)) {
      for (const auto& r : o["residues_nonzero"]) {
        if (!r.is_object() || !r.contains("p") || !r.contains("value") ||
            !r["p"].is_number_unsigned() || !r["value"].is_number_unsigned()) {
          out.push_back(where + ": malformed residues_nonzero entry");
          break;
        }
      }
      if (o.contains("exceptions") &&
          o["residues_nonzero"].size() != o["exceptions"].size()) {
        out.push_back(where + ": residues_nonzero and exceptions disagree");
      }
    }
  }
  return out;
}

}  // namespace fmzv
