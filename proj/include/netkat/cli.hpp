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

#ifndef NETKAT_CLI_HPP_
#define NETKAT_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace netkat {

inline constexpr int kExitSafe = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUnsafe = 2;
inline constexpr int kExitBudget = 3;

// The command-line front end, callable in-process:
//
//   check <specfile> [--format text|json] [--no-minimize] [--oracle]
//                    [--trace <file>] [--max-words N]
//
// Exit codes: 0 safe, 2 unsafe, 1 parse/validation/usage errors, 3 when the
// word budget is exceeded. args excludes the program name.
int run_check(const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err);

}  // namespace netkat

#endif  // NETKAT_CLI_HPP_
