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

#include "netkat/rewrite.hpp"

#include <algorithm>
#include <utility>

#include "netkat/errors.hpp"
#include "netkat/parser.hpp"

namespace netkat {

const SymbolicStore::Entry* SymbolicStore::lookup(const Field& f) const {
  auto it = known_.find(f);
  return it == known_.end() ? nullptr : &it->second;
}

void SymbolicStore::record(const Field& f, Value v, WriterKind writer) {
  known_[f] = Entry{v, writer};
}

void RewriteTrace::add(std::string axiom, std::string position,
                       std::string before, std::string after) {
  steps.push_back(RewriteStep{std::move(axiom), std::move(position),
                              std::move(before), std::move(after)});
}

std::string RewriteTrace::to_text() const {
  std::string out;
  for (const RewriteStep& step : steps) {
    out += step.axiom;
    out += '\t';
    out += step.position;
    out += '\t';
    out += step.before;
    out += '\t';
    out += step.after;
    out += '\n';
  }
  return out;
}

WordNormalizer::WordNormalizer(RewriteTrace* trace,
                               std::string position_prefix)
    : trace_(trace), position_prefix_(std::move(position_prefix)) {}

std::string WordNormalizer::position() const {
  return position_prefix_ + "a" + std::to_string(pushed_ - 1);
}

bool WordNormalizer::push(const Atom& atom) {
  if (zero_) return false;
  ++pushed_;
  if (atom.kind == AtomKind::kMod) {
    // PA-MOD-MOD and PA-FILTER-MOD are inhibited: the modification stays even
    // when the store already forces this exact value.
    atoms_.push_back(atom);
    store_.record(atom.field, atom.value, WriterKind::kMod);
    return true;
  }
  const SymbolicStore::Entry* known = store_.lookup(atom.field);
  if (known == nullptr) {
    atoms_.push_back(atom);
    store_.record(atom.field, atom.value, WriterKind::kTest);
    return true;
  }
  const Atom writer_atom = known->writer == WriterKind::kMod
                               ? ModAtom(atom.field, known->value)
                               : TestAtom(atom.field, known->value);
  if (known->value == atom.value) {
    // Redundant test: drop it.
    if (trace_ != nullptr) {
      trace_->add(known->writer == WriterKind::kMod ? "PA-MOD-FILTER"
                                                    : "BA-SEQ-IDEM",
                  position(),
                  render_atom(writer_atom) + "." + render_atom(atom),
                  render_atom(writer_atom));
    }
    return true;
  }
  // Contradiction: the word is zero. After a modification the contradiction
  // is reached by first exposing the forced test via PA-MOD-FILTER.
  if (trace_ != nullptr) {
    const Atom forced = TestAtom(atom.field, known->value);
    if (known->writer == WriterKind::kMod) {
      trace_->add("PA-MOD-FILTER", position(), render_atom(writer_atom),
                  render_atom(writer_atom) + "." + render_atom(forced));
    }
    trace_->add("PA-CONTRA", position(),
                render_atom(forced) + "." + render_atom(atom), "0");
    trace_->add("KA-ZERO-SEQ", position(), render_word(word()) + ".0", "0");
  }
  zero_ = true;
  atoms_.clear();
  return false;
}

void WordNormalizer::push_all(const std::vector<Atom>& atoms) {
  for (const Atom& atom : atoms) {
    if (!push(atom)) return;
  }
}

Word WordNormalizer::word() const {
  if (zero_) return Word::MakeZero();
  return Word{atoms_, false};
}

Policy star_eliminate(const NetworkSpec& spec, RewriteTrace* trace) {
  const std::size_t n = spec.hbh.size();
  Policy acc = spec.ingress;
  const Policy step = Union(Filter(One()), Seq(spec.policy, spec.topology));
  for (std::size_t i = 0; i < n; ++i) {
    acc = Seq(acc, step);
  }
  acc = Seq(acc, spec.egress);
  if (trace != nullptr) {
    trace->add("STAR-ELIM", "-", render_policy(end_to_end_term(spec)),
               render_policy(acc));
  }
  return acc;
}

std::vector<Policy> expand_power(const Policy& base, std::size_t n) {
  std::vector<Policy> out = {Filter(One())};
  if (is_zero_term(base)) return out;       // zero powers vanish
  if (base == Filter(One())) return out;    // powers of the identity collapse
  Policy power = base;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i > 1) power = Seq(power, base);
    const bool duplicate = std::any_of(out.begin(), out.end(),
                                       [&](const Policy& q) { return q == power; });
    if (!duplicate) out.push_back(power);
  }
  return out;
}

namespace {

using Emit = std::function<void(Word&&)>;

// Continuation-passing enumeration: k receives each extension of prefix by
// one summand of the predicate.
void enumerate_pred(const Predicate& a, const Word& prefix,
                    const std::function<void(const Word&)>& k) {
  switch (a.kind()) {
    case Predicate::Kind::kOne:
      k(prefix);
      return;
    case Predicate::Kind::kZero:
      k(Word::MakeZero());
      return;
    case Predicate::Kind::kTest: {
      Word extended = prefix;
      extended.atoms.push_back(TestAtom(a.field(), a.value()));
      k(extended);
      return;
    }
    case Predicate::Kind::kOr:
      enumerate_pred(a.left(), prefix, k);
      enumerate_pred(a.right(), prefix, k);
      return;
    case Predicate::Kind::kAnd:
      enumerate_pred(a.left(), prefix, [&](const Word& mid) {
        if (mid.is_zero) {
          k(mid);
        } else {
          enumerate_pred(a.right(), mid, k);
        }
      });
      return;
    case Predicate::Kind::kNeg:
      throw UnsupportedAtom("negation");
  }
}

void enumerate_policy(const Policy& p, const Word& prefix,
                      const std::function<void(const Word&)>& k) {
  switch (p.kind()) {
    case Policy::Kind::kFilter:
      enumerate_pred(p.predicate(), prefix, k);
      return;
    case Policy::Kind::kMod: {
      Word extended = prefix;
      extended.atoms.push_back(ModAtom(p.field(), p.value()));
      k(extended);
      return;
    }
    case Policy::Kind::kUnion:
      enumerate_policy(p.left(), prefix, k);
      enumerate_policy(p.right(), prefix, k);
      return;
    case Policy::Kind::kSeq:
      enumerate_policy(p.left(), prefix, [&](const Word& mid) {
        if (mid.is_zero) {
          k(mid);  // KA-ZERO-SEQ: the right factor cannot revive the word
        } else {
          enumerate_policy(p.right(), mid, k);
        }
      });
      return;
    case Policy::Kind::kStar:
      throw UnsupportedAtom("star");
    case Policy::Kind::kDup:
      throw UnsupportedAtom("dup");
  }
}

}  // namespace

void for_each_word(const Policy& p, const Emit& emit) {
  enumerate_policy(p, Word{}, [&](const Word& w) { emit(Word(w)); });
}

std::vector<Word> distribute_to_words(const Policy& p) {
  std::vector<Word> out;
  for_each_word(p, [&](Word&& w) { out.push_back(std::move(w)); });
  return out;
}

Word normalize_word(const Word& w, RewriteTrace* trace,
                    const std::string& position_prefix) {
  if (w.is_zero) return w;
  WordNormalizer normalizer(trace, position_prefix);
  normalizer.push_all(w.atoms);
  return normalizer.word();
}

}  // namespace netkat
