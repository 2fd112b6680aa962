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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "fmzv/identity.h"
#include "fmzv/scan.h"

namespace fmzv {

inline constexpr const char* kReportFormat = "fmzv-report/1";

// A single pass/fail check with both sides recorded.
struct CheckRecord {
  std::string statement;
  ParamList params;
  bool pass = false;
  std::string value;
  std::string expected;
};

CheckRecord ToCheckRecord(const FormulaVerdict& v);

// Everything one CLI invocation produced. The JSON body is a pure function
// of the inputs; wall-clock data lives under the separate "metadata" key.
struct SweepReport {
  std::string command;
  uint64_t seed = 0;
  std::vector<AdelicObservation> observations;
  std::vector<VerdictList> identities;
  std::vector<CheckRecord> checks;
  std::vector<std::string> violations;
  std::string status;  // "pass", "fail" or "report"
  double elapsed_ms = 0;
  unsigned threads = 1;
};

// Reports are emitted with insertion-ordered keys.
using Json = nlohmann::ordered_json;

// Checks with more records than this are serialized as failures only.
constexpr std::size_t kMaxInlineChecks = 64;

Json ObservationToJson(const AdelicObservation& obs);
Json ReportToJson(const SweepReport& report, bool with_metadata = true);
// Body only: the report with "metadata" removed, dumped with 2-space indent.
std::string ReportBody(const Json& report);

// One row per (statement instance, prime class / verdict).
void WriteCsv(const SweepReport& report, std::ostream& out);
void WriteText(const SweepReport& report, std::ostream& out);

// Structural check of a serialized report against the stable field names.
std::vector<std::string> SchemaViolations(const Json& report);

}  // namespace fmzv
