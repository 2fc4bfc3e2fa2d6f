// Copyright 2026 The NetKAT authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETKAT_REPORT_HPP_
#define NETKAT_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netkat/ast.hpp"
#include "netkat/explain.hpp"
#include "netkat/network.hpp"

namespace netkat {

struct OracleReport {
  bool agrees = false;
  std::vector<std::vector<Value>> paths;

  friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

struct ReportExplanation {
  std::string word;
  std::vector<Value> hops;

  friend bool operator==(const ReportExplanation&,
                         const ReportExplanation&) = default;
};

struct Report {
  std::string verdict;  // "SAFE" or "UNSAFE"
  std::uint64_t n = 0;
  std::vector<ReportExplanation> explanations;
  std::optional<OracleReport> oracle;
  std::uint64_t timing_ms = 0;

  friend bool operator==(const Report&, const Report&) = default;
};

enum class ReportFormat { kText, kJson };

Report build_report(const SafetyVerdict& verdict, std::uint64_t timing_ms);

// Cross-checks the verdict against the denotational oracle: semantic
// emptiness of in.(p.t)*.out plus the loop-free path enumeration.
OracleReport run_oracle(const NetworkSpec& spec, const SafetyVerdict& verdict);

// Text: a SAFE/UNSAFE header, then one "word  [hops]" line per explanation.
// JSON: schema 1, stable key order, byte-identical for identical reports.
std::string emit_report(const Report& report, ReportFormat format);

// Inverse of emit_report for the JSON format.
Report report_from_json(const std::string& json_text);

}  // namespace netkat

#endif  // NETKAT_REPORT_HPP_
