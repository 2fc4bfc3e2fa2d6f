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

#include "netkat/report.hpp"

#include <json.hpp>

#include "netkat/parser.hpp"
#include "netkat/semantics.hpp"

namespace netkat {

Report build_report(const SafetyVerdict& verdict, std::uint64_t timing_ms) {
  Report report;
  report.verdict = verdict.verdict == Verdict::kSafe ? "SAFE" : "UNSAFE";
  report.n = verdict.n_used;
  for (const Explanation& e : verdict.explanations) {
    report.explanations.push_back(
        ReportExplanation{render_word(e.word), e.hops});
  }
  report.timing_ms = timing_ms;
  return report;
}

OracleReport run_oracle(const NetworkSpec& spec, const SafetyVerdict& verdict) {
  OracleReport oracle;
  const bool empty = is_semantically_empty(end_to_end_term(spec), spec.domains);
  oracle.agrees = empty == (verdict.verdict == Verdict::kSafe);
  for (const std::vector<Value>& path : enumerate_loopfree_paths(spec)) {
    oracle.paths.push_back(path);
  }
  return oracle;
}

namespace {

std::string hops_text(const std::vector<Value>& hops) {
  std::string out = "[";
  for (std::size_t i = 0; i < hops.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(hops[i]);
  }
  out += "]";
  return out;
}

std::string emit_text(const Report& report) {
  std::string out;
  if (report.verdict == "SAFE") {
    out += "SAFE\n";
  } else {
    out += "UNSAFE (" + std::to_string(report.explanations.size()) +
           " explanations, n=" + std::to_string(report.n) + ")\n";
    for (const ReportExplanation& e : report.explanations) {
      out += e.word + "  " + hops_text(e.hops) + "\n";
    }
  }
  if (report.oracle.has_value()) {
    out += report.oracle->agrees ? "oracle: agrees\n" : "oracle: DISAGREES\n";
    for (const std::vector<Value>& path : report.oracle->paths) {
      out += "oracle path: " + hops_text(path) + "\n";
    }
  }
  return out;
}

std::string emit_json(const Report& report) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["verdict"] = report.verdict;
  j["n"] = report.n;
  nlohmann::ordered_json expls = nlohmann::ordered_json::array();
  for (const ReportExplanation& e : report.explanations) {
    nlohmann::ordered_json item;
    item["word"] = e.word;
    item["hops"] = e.hops;
    expls.push_back(std::move(item));
  }
  j["explanations"] = std::move(expls);
  if (report.oracle.has_value()) {
    nlohmann::ordered_json oracle;
    oracle["agrees"] = report.oracle->agrees;
    oracle["paths"] = report.oracle->paths;
    j["oracle"] = std::move(oracle);
  }
  j["timing_ms"] = report.timing_ms;
  return j.dump(2) + "\n";
}

}  // namespace

std::string emit_report(const Report& report, ReportFormat format) {
  return format == ReportFormat::kText ? emit_text(report) : emit_json(report);
}

Report report_from_json(const std::string& json_text) {
  const nlohmann::json j = nlohmann::json::parse(json_text);
  Report report;
  report.verdict = j.at("verdict").get<std::string>();
  report.n = j.at("n").get<std::uint64_t>();
  for (const auto& item : j.at("explanations")) {
    report.explanations.push_back(
        ReportExplanation{item.at("word").get<std::string>(),
                          item.at("hops").get<std::vector<Value>>()});
  }
  if (j.contains("oracle")) {
    OracleReport oracle;
    oracle.agrees = j["oracle"].at("agrees").get<bool>();
    oracle.paths =
        j["oracle"].at("paths").get<std::vector<std::vector<Value>>>();
    report.oracle = std::move(oracle);
  }
  report.timing_ms = j.at("timing_ms").get<std::uint64_t>();
  return report;
}

}  // namespace netkat
