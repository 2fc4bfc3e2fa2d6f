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

#include "netkat/ast.hpp"

#include <cassert>
#include <cctype>
#include <utility>

namespace netkat {

bool is_valid_field_name(const Field& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') {
    return false;
  }
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

struct Predicate::Node {
  Kind kind;
  Field field;
  Value value = 0;
  std::shared_ptr<const Node> a, b;
};

namespace {

const std::shared_ptr<const Predicate::Node>& zero_pred_node() {
  static const auto node = std::make_shared<const Predicate::Node>(
      Predicate::Node{Predicate::Kind::kZero, {}, 0, nullptr, nullptr});
  return node;
}

const std::shared_ptr<const Predicate::Node>& one_pred_node() {
  static const auto node = std::make_shared<const Predicate::Node>(
      Predicate::Node{Predicate::Kind::kOne, {}, 0, nullptr, nullptr});
  return node;
}

}  // namespace

Predicate::Predicate() : node_(zero_pred_node()) {}
Predicate::Predicate(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

Predicate::Kind Predicate::kind() const { return node_->kind; }

const Field& Predicate::field() const {
  assert(node_->kind == Kind::kTest);
  return node_->field;
}

Value Predicate::value() const {
  assert(node_->kind == Kind::kTest);
  return node_->value;
}

Predicate Predicate::left() const {
  assert(node_->a != nullptr);
  return Predicate(node_->a);
}

Predicate Predicate::right() const {
  assert(node_->b != nullptr);
  return Predicate(node_->b);
}

bool operator==(const Predicate& a, const Predicate& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case Predicate::Kind::kZero:
    case Predicate::Kind::kOne:
      return true;
    case Predicate::Kind::kTest:
      return a.node_->field == b.node_->field &&
             a.node_->value == b.node_->value;
    case Predicate::Kind::kNeg:
      return a.left() == b.left();
    case Predicate::Kind::kOr:
    case Predicate::Kind::kAnd:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

Predicate Zero() { return Predicate(zero_pred_node()); }
Predicate One() { return Predicate(one_pred_node()); }

Predicate Test(Field f, Value v) {
  return Predicate(std::make_shared<const Predicate::Node>(Predicate::Node{
      Predicate::Kind::kTest, std::move(f), v, nullptr, nullptr}));
}

Predicate Not(Predicate a) {
  return Predicate(std::make_shared<const Predicate::Node>(Predicate::Node{
      Predicate::Kind::kNeg, {}, 0, std::move(a.node_), nullptr}));
}

Predicate Or(Predicate a, Predicate b) {
  return Predicate(std::make_shared<const Predicate::Node>(Predicate::Node{
      Predicate::Kind::kOr, {}, 0, std::move(a.node_), std::move(b.node_)}));
}

Predicate And(Predicate a, Predicate b) {
  return Predicate(std::make_shared<const Predicate::Node>(Predicate::Node{
      Predicate::Kind::kAnd, {}, 0, std::move(a.node_), std::move(b.node_)}));
}

struct Policy::Node {
  Kind kind;
  Predicate pred;
  Field field;
  Value value = 0;
  std::shared_ptr<const Node> p, q;
};

namespace {

const std::shared_ptr<const Policy::Node>& drop_policy_node() {
  static const auto node = std::make_shared<const Policy::Node>(
      Policy::Node{Policy::Kind::kFilter, Zero(), {}, 0, nullptr, nullptr});
  return node;
}

}  // namespace

Policy::Policy() : node_(drop_policy_node()) {}
Policy::Policy(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Policy::Kind Policy::kind() const { return node_->kind; }

const Predicate& Policy::predicate() const {
  assert(node_->kind == Kind::kFilter);
  return node_->pred;
}

const Field& Policy::field() const {
  assert(node_->kind == Kind::kMod);
  return node_->field;
}

Value Policy::value() const {
  assert(node_->kind == Kind::kMod);
  return node_->value;
}

Policy Policy::left() const {
  assert(node_->p != nullptr);
  return Policy(node_->p);
}

Policy Policy::right() const {
  assert(node_->q != nullptr);
  return Policy(node_->q);
}

bool operator==(const Policy& a, const Policy& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case Policy::Kind::kFilter:
      return a.node_->pred == b.node_->pred;
    case Policy::Kind::kMod:
      return a.node_->field == b.node_->field &&
             a.node_->value == b.node_->value;
    case Policy::Kind::kUnion:
    case Policy::Kind::kSeq:
      return a.left() == b.left() && a.right() == b.right();
    case Policy::Kind::kStar:
      return a.left() == b.left();
    case Policy::Kind::kDup:
      return true;
  }
  return false;
}

Policy Filter(Predicate a) {
  return Policy(std::make_shared<const Policy::Node>(Policy::Node{
      Policy::Kind::kFilter, std::move(a), {}, 0, nullptr, nullptr}));
}

Policy Mod(Field f, Value v) {
  return Policy(std::make_shared<const Policy::Node>(Policy::Node{
      Policy::Kind::kMod, {}, std::move(f), v, nullptr, nullptr}));
}

Policy Union(Policy p, Policy q) {
  return Policy(std::make_shared<const Policy::Node>(
      Policy::Node{Policy::Kind::kUnion, {}, {}, 0, std::move(p.node_),
                   std::move(q.node_)}));
}

Policy Seq(Policy p, Policy q) {
  return Policy(std::make_shared<const Policy::Node>(Policy::Node{
      Policy::Kind::kSeq, {}, {}, 0, std::move(p.node_), std::move(q.node_)}));
}

Policy Star(Policy p) {
  return Policy(std::make_shared<const Policy::Node>(Policy::Node{
      Policy::Kind::kStar, {}, {}, 0, std::move(p.node_), nullptr}));
}

Policy Dup() {
  static const Policy dup = Policy(std::make_shared<const Policy::Node>(
      Policy::Node{Policy::Kind::kDup, {}, {}, 0, nullptr, nullptr}));
  return dup;
}

Atom TestAtom(Field f, Value v) { return Atom{AtomKind::kTest, std::move(f), v}; }
Atom ModAtom(Field f, Value v) { return Atom{AtomKind::kMod, std::move(f), v}; }

namespace {

void flatten_union_into(const Policy& p, std::vector<Policy>& out) {
  if (p.kind() == Policy::Kind::kUnion) {
    flatten_union_into(p.left(), out);
    flatten_union_into(p.right(), out);
    return;
  }
  if (is_zero_term(p)) return;
  out.push_back(p);
}

void flatten_seq_into(const Policy& p, std::vector<Policy>& out) {
  if (p.kind() == Policy::Kind::kSeq) {
    flatten_seq_into(p.left(), out);
    flatten_seq_into(p.right(), out);
    return;
  }
  out.push_back(p);
}

}  // namespace

std::vector<Policy> flatten_union(const Policy& p) {
  std::vector<Policy> out;
  flatten_union_into(p, out);
  return out;
}

Policy refold_union(const std::vector<Policy>& summands) {
  if (summands.empty()) return Filter(Zero());
  Policy acc = summands.front();
  for (std::size_t i = 1; i < summands.size(); ++i) {
    acc = Union(acc, summands[i]);
  }
  return acc;
}

std::size_t policy_size(const Policy& p) { return flatten_union(p).size(); }

std::vector<Policy> flatten_seq(const Policy& p) {
  std::vector<Policy> out;
  flatten_seq_into(p, out);
  return out;
}

Policy refold_seq(const std::vector<Policy>& factors) {
  if (factors.empty()) return Filter(One());
  Policy acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    acc = Seq(acc, factors[i]);
  }
  return acc;
}

bool contains_star(const Policy& p) {
  switch (p.kind()) {
    case Policy::Kind::kStar:
      return true;
    case Policy::Kind::kUnion:
    case Policy::Kind::kSeq:
      return contains_star(p.left()) || contains_star(p.right());
    default:
      return false;
  }
}

bool contains_dup(const Policy& p) {
  switch (p.kind()) {
    case Policy::Kind::kDup:
      return true;
    case Policy::Kind::kUnion:
    case Policy::Kind::kSeq:
      return contains_dup(p.left()) || contains_dup(p.right());
    case Policy::Kind::kStar:
      return contains_dup(p.left());
    default:
      return false;
  }
}

bool is_zero_term(const Policy& p) {
  switch (p.kind()) {
    case Policy::Kind::kFilter:
      return p.predicate().kind() == Predicate::Kind::kZero;
    case Policy::Kind::kSeq:
      return is_zero_term(p.left()) || is_zero_term(p.right());
    case Policy::Kind::kUnion:
      return is_zero_term(p.left()) && is_zero_term(p.right());
    default:
      return false;
  }
}

Policy word_to_policy(const Word& w) {
  if (w.is_zero) return Filter(Zero());
  std::vector<Policy> factors;
  factors.reserve(w.atoms.size());
  for (const Atom& atom : w.atoms) {
    factors.push_back(atom.kind == AtomKind::kTest
                          ? Filter(Test(atom.field, atom.value))
                          : Mod(atom.field, atom.value));
  }
  return refold_seq(factors);
}

}  // namespace netkat
