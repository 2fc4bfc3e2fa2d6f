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

#include "netkat/validate.hpp"

#include <algorithm>
#include <string>

#include "netkat/errors.hpp"

namespace netkat {

const char* to_string(HbhReason reason) {
  switch (reason) {
    case HbhReason::kContainsStar:
      return "contains star";
    case HbhReason::kContainsDup:
      return "contains dup";
    case HbhReason::kContainsNegation:
      return "contains negation";
    case HbhReason::kNotPositiveTest:
      return "factor is not a positive test";
    case HbhReason::kNestedUnion:
      return "contains a nested union";
    case HbhReason::kAssignmentNotOnPortField:
      return "assignment is not on the port field";
    case HbhReason::kMultipleAssignments:
      return "multiple assignments";
    case HbhReason::kNoAssignment:
      return "no assignment";
    case HbhReason::kAssignmentNotLast:
      return "assignment is not the last factor";
  }
  return "unknown";
}

std::size_t HbhInfo::distinct_size() const {
  std::vector<const HbhSummand*> seen;
  for (const HbhSummand& s : summands) {
    bool dup = std::any_of(seen.begin(), seen.end(),
                           [&](const HbhSummand* t) { return *t == s; });
    if (!dup) seen.push_back(&s);
  }
  return seen.size();
}

std::optional<Value> TopologyInfo::link_target(Value from) const {
  for (const auto& [src, dst] : internal_links) {
    if (src == from) return dst;
  }
  return std::nullopt;
}

namespace {

bool predicate_contains_neg(const Predicate& a) {
  switch (a.kind()) {
    case Predicate::Kind::kNeg:
      return true;
    case Predicate::Kind::kOr:
    case Predicate::Kind::kAnd:
      return predicate_contains_neg(a.left()) ||
             predicate_contains_neg(a.right());
    default:
      return false;
  }
}

}  // namespace

HbhInfo validate_hbh(const Policy& p, const Field& port_field) {
  HbhInfo info;
  const std::vector<Policy> summands = flatten_union(p);
  for (std::size_t i = 0; i < summands.size(); ++i) {
    HbhSummand parsed;
    bool have_assignment = false;
    for (const Policy& factor : flatten_seq(summands[i])) {
      switch (factor.kind()) {
        case Policy::Kind::kStar:
          throw NotHbH(i, HbhReason::kContainsStar);
        case Policy::Kind::kDup:
          throw NotHbH(i, HbhReason::kContainsDup);
        case Policy::Kind::kUnion:
          throw NotHbH(i, HbhReason::kNestedUnion);
        case Policy::Kind::kMod:
          if (have_assignment) throw NotHbH(i, HbhReason::kMultipleAssignments);
          if (factor.field() != port_field) {
            throw NotHbH(i, HbhReason::kAssignmentNotOnPortField);
          }
          parsed.assignment = ModAtom(factor.field(), factor.value());
          have_assignment = true;
          break;
        case Policy::Kind::kFilter: {
          if (have_assignment) throw NotHbH(i, HbhReason::kAssignmentNotLast);
          const Predicate& a = factor.predicate();
          if (predicate_contains_neg(a)) {
            throw NotHbH(i, HbhReason::kContainsNegation);
          }
          if (a.kind() != Predicate::Kind::kTest) {
            throw NotHbH(i, HbhReason::kNotPositiveTest);
          }
          parsed.tests.push_back(TestAtom(a.field(), a.value()));
          break;
        }
        case Policy::Kind::kSeq:
          break;  // flattened away
      }
    }
    if (!have_assignment) throw NotHbH(i, HbhReason::kNoAssignment);
    info.summands.push_back(std::move(parsed));
  }
  return info;
}

TopologyInfo validate_topology(const Policy& t, const Field& port_field) {
  TopologyInfo info;
  std::set<Value> sources;
  const std::vector<Policy> summands = flatten_union(t);
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const std::vector<Policy> factors = flatten_seq(summands[i]);
    if (factors.empty() || factors.size() > 2) {
      throw NotTopology(i, "expected pt=v or pt=v.pt<-v'");
    }
    const Policy& head = factors[0];
    if (head.kind() != Policy::Kind::kFilter ||
        head.predicate().kind() != Predicate::Kind::kTest) {
      throw NotTopology(i, "summand does not start with a port test");
    }
    if (head.predicate().field() != port_field) {
      throw NotTopology(i, "test is not on the port field");
    }
    const Value from = head.predicate().value();
    if (!sources.insert(from).second) {
      throw NotTopology(i, "port " + std::to_string(from) +
                               " appears in more than one summand");
    }
    if (factors.size() == 1) {
      info.perimeter_ports.insert(from);
      continue;
    }
    const Policy& tail = factors[1];
    if (tail.kind() != Policy::Kind::kMod) {
      throw NotTopology(i, "second factor is not a port assignment");
    }
    if (tail.field() != port_field) {
      throw NotTopology(i, "assignment is not on the port field");
    }
    info.internal_links.emplace_back(from, tail.value());
  }
  return info;
}

namespace {

// Collects the test atoms of one disjunct. Only positive tests, conjunction,
// and One (the empty sequence) may appear inside a disjunct.
void collect_conjuncts(const Predicate& a, std::vector<Atom>& out) {
  switch (a.kind()) {
    case Predicate::Kind::kOne:
      return;
    case Predicate::Kind::kTest:
      out.push_back(TestAtom(a.field(), a.value()));
      return;
    case Predicate::Kind::kAnd:
      collect_conjuncts(a.left(), out);
      collect_conjuncts(a.right(), out);
      return;
    case Predicate::Kind::kNeg:
      throw NotInOut("negation is not a positive test");
    case Predicate::Kind::kZero:
      throw NotInOut("zero inside a test sequence");
    case Predicate::Kind::kOr:
      throw NotInOut("nested sum inside a test sequence");
  }
}

void collect_disjuncts(const Predicate& a,
                       std::vector<std::vector<Atom>>& out) {
  switch (a.kind()) {
    case Predicate::Kind::kZero:
      return;  // the empty sum
    case Predicate::Kind::kOr:
      collect_disjuncts(a.left(), out);
      collect_disjuncts(a.right(), out);
      return;
    default: {
      std::vector<Atom> tests;
      collect_conjuncts(a, tests);
      out.push_back(std::move(tests));
      return;
    }
  }
}

}  // namespace

std::vector<std::vector<Atom>> validate_inout(const Predicate& a) {
  std::vector<std::vector<Atom>> out;
  collect_disjuncts(a, out);
  return out;
}

Policy rebuild_summand(const HbhSummand& summand) {
  std::vector<Policy> factors;
  factors.reserve(summand.tests.size() + 1);
  for (const Atom& test : summand.tests) {
    factors.push_back(Filter(Test(test.field, test.value)));
  }
  factors.push_back(Mod(summand.assignment.field, summand.assignment.value));
  return refold_seq(factors);
}

Policy rebuild_hbh(const HbhInfo& info) {
  std::vector<Policy> summands;
  summands.reserve(info.summands.size());
  for (const HbhSummand& s : info.summands) {
    summands.push_back(rebuild_summand(s));
  }
  return refold_union(summands);
}

}  // namespace netkat
