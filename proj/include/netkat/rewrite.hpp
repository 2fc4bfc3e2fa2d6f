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
//
// The modified equational engine: star elimination, power expansion,
// distribution to sum-of-words form, and word normalization with
// PA-MOD-MOD, PA-FILTER-MOD and KA-UNROLL-R/L inhibited, so that
// modification chains survive into the explanations.

#ifndef NETKAT_REWRITE_HPP_
#define NETKAT_REWRITE_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "netkat/ast.hpp"
#include "netkat/network.hpp"

namespace netkat {

// Which kind of atom last forced a field's value during a left-to-right pass.
enum class WriterKind { kTest, kMod };

// The values forced by the atoms processed so far.
class SymbolicStore {
 public:
  struct Entry {
    Value value;
    WriterKind writer;
  };

  // Null when nothing is known about f.
  const Entry* lookup(const Field& f) const;
  void record(const Field& f, Value v, WriterKind writer);

 private:
  std::map<Field, Entry> known_;
};

struct RewriteStep {
  std::string axiom;
  std::string position;  // "a<k>" = k-th atom of the input word, 0-based
  std::string before;
  std::string after;
};

// An audit of a derivation: replaying the steps over the input term yields
// the output term.
struct RewriteTrace {
  std::vector<RewriteStep> steps;

  void add(std::string axiom, std::string position, std::string before,
           std::string after);
  // One step per line: axiom<TAB>position<TAB>before<TAB>after.
  std::string to_text() const;
};

// Streaming left-to-right word normalizer. Feed atoms with push(); the kept
// atoms accumulate in atoms() unless the word collapses to zero. Copyable,
// so a partially normalized word can fan out over alternative suffixes.
class WordNormalizer {
 public:
  WordNormalizer() = default;
  WordNormalizer(RewriteTrace* trace, std::string position_prefix);

  // Processes one atom; returns false once the word is zero.
  bool push(const Atom& atom);
  void push_all(const std::vector<Atom>& atoms);

  bool is_zero() const { return zero_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  Word word() const;

 private:
  std::string position() const;

  SymbolicStore store_;
  std::vector<Atom> atoms_;
  bool zero_ = false;
  std::size_t pushed_ = 0;
  RewriteTrace* trace_ = nullptr;
  std::string position_prefix_;
};

// Applies the star elimination axiom to the end-to-end behaviour of the
// network: in.(p.t)*.out becomes in.(1+p.t)^n.out with n the hop-by-hop
// size. Star-free by construction.
Policy star_eliminate(const NetworkSpec& spec, RewriteTrace* trace = nullptr);

// The summand list [1, base, base^2, ..., base^n], powers built with Seq.
// Zero powers are dropped and structural duplicates are not generated.
std::vector<Policy> expand_power(const Policy& base, std::size_t n);

// Streams the fully distributed sum-of-words form of p in source order,
// one word per summand. p must be star- and dup-free with all predicates
// sums of positive test sequences; anything else throws UnsupportedAtom.
// A zero factor short-circuits its summand to a single zero word.
void for_each_word(const Policy& p, const std::function<void(Word&&)>& emit);

// for_each_word, collected.
std::vector<Word> distribute_to_words(const Policy& p);

// Normalizes one word with the store-based left-to-right pass:
//   - a test already forced by the store is dropped (PA-MOD-FILTER after a
//     modification, BA-SEQ-IDEM after a test);
//   - a test contradicting the store zeroes the word (PA-CONTRA, reached
//     through PA-MOD-FILTER when the last writer was a modification);
//   - modifications are always kept: PA-MOD-MOD and PA-FILTER-MOD stay
//     inhibited.
Word normalize_word(const Word& w, RewriteTrace* trace = nullptr,
                    const std::string& position_prefix = "");

}  // namespace netkat

#endif  // NETKAT_REWRITE_HPP_
