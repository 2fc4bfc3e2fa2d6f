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

#include "netkat/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

#include <CLI11.hpp>

#include "netkat/errors.hpp"
#include "netkat/explain.hpp"
#include "netkat/parser.hpp"
#include "netkat/report.hpp"
#include "netkat/rewrite.hpp"

namespace netkat {

namespace {

struct CheckArgs {
  std::string specfile;
  std::string format = "text";
  bool no_minimize = false;
  bool oracle = false;
  std::string trace_path;
  std::uint64_t max_words = 1'000'000;
};

int do_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const NetworkSpec spec = load_network_spec_file(args.specfile);

    RewriteTrace trace;
    CheckOptions options;
    options.minimize = !args.no_minimize;
    options.max_words = args.max_words;
    if (!args.trace_path.empty()) options.trace = &trace;

    const auto started = std::chrono::steady_clock::now();
    const SafetyVerdict verdict = check_safety(spec, options);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);

    Report report =
        build_report(verdict, static_cast<std::uint64_t>(elapsed.count()));
    if (args.oracle) report.oracle = run_oracle(spec, verdict);

    if (!args.trace_path.empty()) {
      std::ofstream trace_out(args.trace_path);
      if (!trace_out) {
        err << "error: cannot write trace file: " << args.trace_path << "\n";
        return kExitError;
      }
      trace_out << trace.to_text();
    }

    out << emit_report(report, args.format == "json" ? ReportFormat::kJson
                                                     : ReportFormat::kText);
    return verdict.verdict == Verdict::kSafe ? kExitSafe : kExitUnsafe;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace

int run_check(const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err) {
  CLI::App app{"NetKAT in-out safety checker"};
  app.require_subcommand(1);

  CheckArgs check_args;
  CLI::App* check =
      app.add_subcommand("check", "Decide in-out safety of a network spec "
                                  "file and explain any violation");
  check->add_option("specfile", check_args.specfile, "network spec file")
      ->required();
  check->add_option("--format", check_args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_flag("--no-minimize", check_args.no_minimize,
                  "keep explanations that are splices of shorter ones");
  check->add_flag("--oracle", check_args.oracle,
                  "cross-check the verdict against the semantic oracle");
  check->add_option("--trace", check_args.trace_path,
                    "write the rewrite derivation to this file");
  check->add_option("--max-words", check_args.max_words,
                    "word expansion budget (default 1000000)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }
  return do_check(check_args, out, err);
}

}  // namespace netkat
