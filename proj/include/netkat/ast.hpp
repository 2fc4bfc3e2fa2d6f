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

#ifndef NETKAT_AST_HPP_
#define NETKAT_AST_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace netkat {

// Packet field identifier, e.g. "pt". Must match [A-Za-z_][A-Za-z0-9_]*.
using Field = std::string;

// Field values are finite naturals.
using Value = std::uint64_t;

bool is_valid_field_name(const Field& name);

// An immutable NetKAT predicate term: 0 | 1 | f=n | !a | a+b | a.b.
// Predicates share structure freely; all nodes are immutable after
// construction, so values are cheap to copy and safe to share across threads.
class Predicate {
 public:
  enum class Kind { kZero, kOne, kTest, kNeg, kOr, kAnd };

  // Default-constructed predicates are the constant-false predicate 0.
  Predicate();

  Kind kind() const;

  // kTest only.
  const Field& field() const;
  Value value() const;

  // kNeg/kOr/kAnd: left() is the (first) operand, right() the second.
  Predicate left() const;
  Predicate right() const;

  friend bool operator==(const Predicate& a, const Predicate& b);
  friend bool operator!=(const Predicate& a, const Predicate& b) {
    return !(a == b);
  }

  friend Predicate Zero();
  friend Predicate One();
  friend Predicate Test(Field f, Value v);
  friend Predicate Not(Predicate a);
  friend Predicate Or(Predicate a, Predicate b);
  friend Predicate And(Predicate a, Predicate b);

  struct Node;  // defined in ast.cpp

 private:
  explicit Predicate(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

Predicate Zero();
Predicate One();
Predicate Test(Field f, Value v);
Predicate Not(Predicate a);
Predicate Or(Predicate a, Predicate b);
Predicate And(Predicate a, Predicate b);

// An immutable NetKAT policy term: filter a | f<-n | p+q | p.q | p* | dup.
class Policy {
 public:
  enum class Kind { kFilter, kMod, kUnion, kSeq, kStar, kDup };

  // Default-constructed policies are the drop-all filter.
  Policy();

  Kind kind() const;

  // kFilter only.
  const Predicate& predicate() const;

  // kMod only.
  const Field& field() const;
  Value value() const;

  // kUnion/kSeq/kStar: left() is the (first) operand, right() the second.
  Policy left() const;
  Policy right() const;

  friend bool operator==(const Policy& a, const Policy& b);
  friend bool operator!=(const Policy& a, const Policy& b) { return !(a == b); }

  friend Policy Filter(Predicate a);
  friend Policy Mod(Field f, Value v);
  friend Policy Union(Policy p, Policy q);
  friend Policy Seq(Policy p, Policy q);
  friend Policy Star(Policy p);
  friend Policy Dup();

  struct Node;  // defined in ast.cpp

 private:
  explicit Policy(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

Policy Filter(Predicate a);
Policy Mod(Field f, Value v);
Policy Union(Policy p, Policy q);
Policy Seq(Policy p, Policy q);
Policy Star(Policy p);
Policy Dup();

// A single test or modification atom of a flat word.
enum class AtomKind { kTest, kMod };

struct Atom {
  AtomKind kind;
  Field field;
  Value value;

  friend bool operator==(const Atom&, const Atom&) = default;
};

Atom TestAtom(Field f, Value v);
Atom ModAtom(Field f, Value v);

// One summand of the fully distributed sum-of-words form: a flat sequence of
// test/mod atoms, or the zero word. A zero word carries no atoms.
struct Word {
  std::vector<Atom> atoms;
  bool is_zero = false;

  static Word MakeZero() { return Word{{}, true}; }

  friend bool operator==(const Word&, const Word&) = default;
};

// Flattens nested unions into the maximal summand list, dropping summands
// that are syntactically zero. Source order is preserved. The empty sum
// (e.g. a bare zero filter) flattens to the empty list.
std::vector<Policy> flatten_union(const Policy& p);

// Left-associative refold; the empty list refolds to the zero filter.
Policy refold_union(const std::vector<Policy>& summands);

// Number of top-level summands after flatten_union.
std::size_t policy_size(const Policy& p);

// Flattens nested sequences into a factor list, in source order.
std::vector<Policy> flatten_seq(const Policy& p);

// Left-associative refold; the empty list refolds to the identity filter.
Policy refold_seq(const std::vector<Policy>& factors);

bool contains_star(const Policy& p);
bool contains_dup(const Policy& p);

// True when p is zero by syntax alone: a zero filter, a sequence with a zero
// factor, or a union of such terms. Star is never zero (0* is the identity).
bool is_zero_term(const Policy& p);

// The policy a word denotes: its atoms in sequence, the identity filter for
// the empty word, the zero filter for the zero word.
Policy word_to_policy(const Word& w);

}  // namespace netkat

#endif  // NETKAT_AST_HPP_
