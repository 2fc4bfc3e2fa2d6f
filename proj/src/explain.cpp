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

#include "netkat/explain.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include "netkat/errors.hpp"
#include "netkat/parser.hpp"

namespace netkat {

std::vector<Value> word_hops(const Word& w, const Field& port_field) {
  std::vector<Value> hops;
  if (w.is_zero) return hops;
  for (const Atom& atom : w.atoms) {
    if (atom.kind == AtomKind::kMod) break;
    if (atom.field == port_field) {
      hops.push_back(atom.value);
      break;
    }
  }
  for (const Atom& atom : w.atoms) {
    if (atom.kind == AtomKind::kMod && atom.field == port_field) {
      hops.push_back(atom.value);
    }
  }
  return hops;
}

namespace {

struct Budget {
  std::uint64_t used = 0;
  std::uint64_t limit;

  void bump() {
    if (++used > limit) throw BudgetExceeded(limit);
  }
};

std::vector<Word> disjunct_words(const std::vector<std::vector<Atom>>& djs) {
  std::vector<Word> words;
  words.reserve(djs.size());
  for (const std::vector<Atom>& tests : djs) {
    words.push_back(Word{tests, false});
  }
  return words;
}

// The pruning pipeline: enumerates the nonzero words of in.(p.t)^i.out for
// i = 0..n (the power expanded as a sum, which generates each word once),
// sharing partial normalizations across levels and cutting dead branches as
// soon as the store contradicts a test.
std::vector<Word> expand_pruned(const NetworkSpec& spec, Budget& budget,
                                std::uint64_t& examined) {
  const std::vector<Word> in_words = disjunct_words(spec.ingress_disjuncts);
  const std::vector<Word> out_words = disjunct_words(spec.egress_disjuncts);
  const std::vector<Word> step_words =
      distribute_to_words(Seq(spec.policy, spec.topology));

  std::vector<Word> nonzero;
  std::vector<WordNormalizer> frontier;
  for (const Word& w : in_words) {
    budget.bump();
    WordNormalizer cursor;
    cursor.push_all(w.atoms);
    if (cursor.is_zero()) {
      ++examined;  // a contradictory ingress disjunct
    } else {
      frontier.push_back(std::move(cursor));
    }
  }

  const std::size_t n = spec.hbh.size();
  for (std::size_t level = 0;; ++level) {
    for (const WordNormalizer& cursor : frontier) {
      for (const Word& ow : out_words) {
        budget.bump();
        WordNormalizer finished = cursor;
        finished.push_all(ow.atoms);
        ++examined;
        if (!finished.is_zero()) nonzero.push_back(finished.word());
      }
    }
    if (level == n || frontier.empty()) break;
    std::vector<WordNormalizer> next;
    for (const WordNormalizer& cursor : frontier) {
      for (const Word& sw : step_words) {
        budget.bump();
        if (sw.is_zero) {
          ++examined;
          continue;
        }
        WordNormalizer extended = cursor;
        extended.push_all(sw.atoms);
        if (extended.is_zero()) {
          ++examined;
        } else {
          next.push_back(std::move(extended));
        }
      }
    }
    frontier = std::move(next);
  }
  return nonzero;
}

// The literal derivation: star elimination, full distribution, one
// normalization per word, all steps recorded.
std::vector<Word> expand_traced(const NetworkSpec& spec,
                                const CheckOptions& options, Budget& budget,
                                std::uint64_t& examined) {
  const Policy eliminated = star_eliminate(spec, options.trace);
  std::vector<Word> nonzero;
  std::uint64_t index = 0;
  for_each_word(eliminated, [&](Word&& w) {
    budget.bump();
    Word normalized = normalize_word(
        w, options.trace, "w" + std::to_string(index) + ".");
    ++index;
    ++examined;
    if (!normalized.is_zero) nonzero.push_back(std::move(normalized));
  });
  return nonzero;
}

std::vector<Explanation> sort_explanations(std::vector<Explanation> expls) {
  std::sort(expls.begin(), expls.end(),
            [](const Explanation& a, const Explanation& b) {
              return std::make_tuple(a.hops.size(), std::cref(a.hops),
                                     render_word(a.word)) <
                     std::make_tuple(b.hops.size(), std::cref(b.hops),
                                     render_word(b.word));
            });
  return expls;
}

// e1 < e2 in the splice order: e2 is e1 with one contiguous nonempty infix
// inserted somewhere.
bool splices_into(const std::vector<Atom>& e1, const std::vector<Atom>& e2) {
  if (e1.size() >= e2.size()) return false;
  for (std::size_t k = 0; k <= e1.size(); ++k) {
    const bool prefix_match = std::equal(e1.begin(), e1.begin() + k, e2.begin());
    const bool suffix_match =
        std::equal(e1.begin() + k, e1.end(), e2.end() - (e1.size() - k));
    if (prefix_match && suffix_match) return true;
  }
  return false;
}

}  // namespace

std::vector<Explanation> minimize_explanations(
    std::vector<Explanation> expls) {
  // Deduplicate first (KA-PLUS-IDEM), keeping first occurrences.
  std::vector<Explanation> unique;
  for (Explanation& e : expls) {
    if (std::find(unique.begin(), unique.end(), e) == unique.end()) {
      unique.push_back(std::move(e));
    }
  }
  // Scanning in increasing length order reaches the fixpoint in one pass: a
  // dominating word is strictly shorter, and kept words stay kept.
  std::stable_sort(unique.begin(), unique.end(),
                   [](const Explanation& a, const Explanation& b) {
                     return a.word.atoms.size() < b.word.atoms.size();
                   });
  std::vector<Explanation> kept;
  for (Explanation& e : unique) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [&](const Explanation& shorter) {
          return splices_into(shorter.word.atoms, e.word.atoms);
        });
    if (!dominated) kept.push_back(std::move(e));
  }
  return sort_explanations(std::move(kept));
}

SafetyVerdict check_safety(const NetworkSpec& spec,
                           const CheckOptions& options) {
  SafetyVerdict result;
  result.n_used = spec.hbh.size();
  Budget budget{0, options.max_words};

  std::vector<Word> nonzero =
      options.trace != nullptr
          ? expand_traced(spec, options, budget, result.words_examined)
          : expand_pruned(spec, budget, result.words_examined);

  std::vector<Explanation> expls;
  for (Word& w : nonzero) {
    Explanation e{std::move(w), {}};
    e.hops = word_hops(e.word, spec.port_field);
    if (std::find(expls.begin(), expls.end(), e) == expls.end()) {
      expls.push_back(std::move(e));
    }
  }
  result.explanations = options.minimize
                            ? minimize_explanations(std::move(expls))
                            : sort_explanations(std::move(expls));
  result.verdict =
      result.explanations.empty() ? Verdict::kSafe : Verdict::kUnsafe;
  return result;
}

std::vector<Explanation> explain_failures(const NetworkSpec& spec,
                                          const CheckOptions& options) {
  return check_safety(spec, options).explanations;
}

}  // namespace netkat
