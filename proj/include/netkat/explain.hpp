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

#ifndef NETKAT_EXPLAIN_HPP_
#define NETKAT_EXPLAIN_HPP_

#include <cstdint>
#include <vector>

#include "netkat/ast.hpp"
#include "netkat/network.hpp"
#include "netkat/rewrite.hpp"

namespace netkat {

// A hazardous loop-free forwarding path, as a canonical nonzero word plus
// the port values it visits: the ingress port (when the word's leading tests
// fix one) followed by each port assignment in order.
struct Explanation {
  Word word;
  std::vector<Value> hops;

  friend bool operator==(const Explanation&, const Explanation&) = default;
};

enum class Verdict { kSafe, kUnsafe };

struct SafetyVerdict {
  Verdict verdict = Verdict::kSafe;
  std::vector<Explanation> explanations;  // empty iff safe
  std::uint64_t n_used = 0;
  std::uint64_t words_examined = 0;
};

struct CheckOptions {
  // Splice-minimize the explanation list (the default); the raw deduplicated
  // list is reported when false.
  bool minimize = true;
  // Abort with BudgetExceeded when the expansion touches more words.
  std::uint64_t max_words = 1'000'000;
  // When set, the derivation is recorded step by step. Tracing runs the
  // plain star_eliminate -> distribute_to_words -> normalize_word chain
  // instead of the pruning pipeline; the resulting verdict is the same.
  RewriteTrace* trace = nullptr;
};

// Decides in-out safety of the network: eliminates the star, distributes to
// words, normalizes each word, and reports Safe iff every word is zero.
// Otherwise returns the deduplicated, minimized, deterministically sorted
// nonzero words as explanations.
SafetyVerdict check_safety(const NetworkSpec& spec,
                           const CheckOptions& options = {});

// The explanation list alone; empty iff the network is safe.
std::vector<Explanation> explain_failures(const NetworkSpec& spec,
                                          const CheckOptions& options = {});

// Drops every explanation that splits as prefix + contiguous infix + suffix
// where some retained explanation equals prefix + suffix exactly, iterated
// to a fixpoint. Output is sorted by (hop count, hops, word text).
std::vector<Explanation> minimize_explanations(std::vector<Explanation> expls);

// Port values visited by a word: the leading port test, if any, then every
// port modification.
std::vector<Value> word_hops(const Word& w, const Field& port_field);

}  // namespace netkat

#endif  // NETKAT_EXPLAIN_HPP_
