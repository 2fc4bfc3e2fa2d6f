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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netkat/errors.hpp"
#include "netkat/parser.hpp"
#include "netkat/semantics.hpp"
#include "netkat/validate.hpp"
#include "support/generators.hpp"

using namespace netkat;
using namespace netkat::testing;

namespace {

HbhReason hbh_failure(const std::string& text) {
  try {
    validate_hbh(parse_policy(text), "pt");
  } catch (const NotHbH& e) {
    return e.reason();
  }
  FAIL("expected NotHbH for: " << text);
  return HbhReason::kNoAssignment;
}

}  // namespace

TEST_CASE("validate_hbh parses the p1 policy") {
  const HbhInfo info = validate_hbh(parse_policy(kPolicyP1), "pt");
  REQUIRE(info.size() == 2);
  CHECK(info.summands[0].tests == std::vector<Atom>{TestAtom("pt", 1)});
  CHECK(info.summands[0].assignment == ModAtom("pt", 5));
  CHECK(info.summands[1].tests == std::vector<Atom>{TestAtom("pt", 6)});
  CHECK(info.summands[1].assignment == ModAtom("pt", 2));
}

TEST_CASE("validate_hbh counts raw summands, distinct separately") {
  const Policy p1 = parse_policy(kPolicyP1);
  const Policy p2 = parse_policy(kPolicyP2);
  CHECK(validate_hbh(Union(p1, p2), "pt").size() == 4);

  const HbhInfo doubled = validate_hbh(Union(p1, p1), "pt");
  CHECK(doubled.size() == 4);
  CHECK(doubled.distinct_size() == 2);
}

TEST_CASE("validate_hbh accepts degenerate shapes") {
  // The empty sum is a hop-by-hop policy of size zero.
  CHECK(validate_hbh(parse_policy("0"), "pt").size() == 0);
  // A bare assignment is a summand with an empty test sequence.
  const HbhInfo info = validate_hbh(parse_policy("pt<-3"), "pt");
  REQUIRE(info.size() == 1);
  CHECK(info.summands[0].tests.empty());
  // Tests may constrain non-port fields.
  const HbhInfo multi = validate_hbh(parse_policy("fa=0 . pt=1 . pt<-2"), "pt");
  REQUIRE(multi.size() == 1);
  CHECK(multi.summands[0].tests.size() == 2);
}

TEST_CASE("validate_hbh rejects each malformed shape") {
  CHECK(hbh_failure("(pt=1 . pt<-5)*") == HbhReason::kContainsStar);
  CHECK(hbh_failure("pt=1 . dup . pt<-5") == HbhReason::kContainsDup);
  CHECK(hbh_failure("!(pt=1) . pt<-5") == HbhReason::kContainsNegation);
  CHECK(hbh_failure("fa<-1") == HbhReason::kAssignmentNotOnPortField);
  CHECK(hbh_failure("pt=1 . pt<-5 . pt<-6") == HbhReason::kMultipleAssignments);
  CHECK(hbh_failure("pt=1 . pt=2") == HbhReason::kNoAssignment);
  CHECK(hbh_failure("pt=1 . pt<-5 . pt=5") == HbhReason::kAssignmentNotLast);
  CHECK(hbh_failure("(pt=1 + pt=2) . pt<-5") == HbhReason::kNestedUnion);
  CHECK(hbh_failure("1 . pt<-5") == HbhReason::kNotPositiveTest);
  try {
    validate_hbh(parse_policy("pt=1.pt<-5 + dup"), "pt");
    FAIL("expected NotHbH");
  } catch (const NotHbH& e) {
    CHECK(e.summand_index() == 1);
    CHECK(e.reason() == HbhReason::kContainsDup);
  }
}

TEST_CASE("rebuilding HbhInfo reproduces the flattened policy") {
  for (const char* text : {kPolicyP1, kPolicyP2, kPolicyP1P2, "pt<-3"}) {
    const Policy p = parse_policy(text);
    const HbhInfo info = validate_hbh(p, "pt");
    CHECK(rebuild_hbh(info) == refold_union(flatten_union(p)));
  }
  Rng rng(7101);
  for (int i = 0; i < 100; ++i) {
    const NetworkSpec spec = random_spec(rng);
    CHECK(rebuild_hbh(spec.hbh) == refold_union(flatten_union(spec.policy)));
  }
}

TEST_CASE("validate_topology parses the two-switch topology") {
  const TopologyInfo info =
      validate_topology(parse_policy(kTwoSwitchTopology), "pt");
  REQUIRE(info.internal_links.size() == 2);
  CHECK(info.internal_links[0] == std::pair<Value, Value>{5, 6});
  CHECK(info.internal_links[1] == std::pair<Value, Value>{6, 5});
  CHECK(info.perimeter_ports == std::set<Value>{1, 2, 3, 4});
  CHECK(info.link_target(5) == Value{6});
  CHECK(info.link_target(1) == std::nullopt);
  CHECK(info.is_perimeter(1));
}

TEST_CASE("validate_topology rejects non-topology terms") {
  CHECK_THROWS_AS(validate_topology(parse_policy("1"), "pt"), NotTopology);
  CHECK_THROWS_AS(validate_topology(parse_policy("pt<-5"), "pt"), NotTopology);
  CHECK_THROWS_AS(validate_topology(parse_policy("pt=5 . pt<-6 . pt<-7"), "pt"),
                  NotTopology);
  CHECK_THROWS_AS(validate_topology(parse_policy("fa=1"), "pt"), NotTopology);
  CHECK_THROWS_AS(validate_topology(parse_policy("pt=5 . fa<-1"), "pt"),
                  NotTopology);
  // A port may appear as a source only once.
  CHECK_THROWS_AS(
      validate_topology(parse_policy("pt=5 . pt<-6 + pt=5"), "pt"),
      NotTopology);
}

TEST_CASE("the empty sum is a topology with no links") {
  const TopologyInfo info = validate_topology(parse_policy("0"), "pt");
  CHECK(info.internal_links.empty());
  CHECK(info.perimeter_ports.empty());
}

TEST_CASE("accepted topology summands behave as their table entries") {
  Rng rng(7102);
  for (int i = 0; i < 60; ++i) {
    const NetworkSpec spec = random_spec(rng);
    for (const Packet& pk : spec.domains.all_packets()) {
      const Value port = pk.at("pt");
      const HistorySet result = eval_policy(spec.topology, {pk}, spec.domains);
      if (auto target = spec.topo.link_target(port)) {
        Packet moved = pk;
        moved["pt"] = *target;
        CHECK(result == HistorySet{{moved}});
      } else if (spec.topo.is_perimeter(port)) {
        CHECK(result == HistorySet{{pk}});
      } else {
        CHECK(result.empty());
      }
    }
  }
}

TEST_CASE("validate_inout splits sums of test sequences") {
  const auto egress = validate_inout(Or(Test("pt", 3), Test("pt", 4)));
  REQUIRE(egress.size() == 2);
  CHECK(egress[0] == std::vector<Atom>{TestAtom("pt", 3)});
  CHECK(egress[1] == std::vector<Atom>{TestAtom("pt", 4)});

  const auto ingress = validate_inout(Test("pt", 1));
  REQUIRE(ingress.size() == 1);
  CHECK(ingress[0] == std::vector<Atom>{TestAtom("pt", 1)});

  const auto seq = validate_inout(And(Test("pt", 1), Test("fa", 0)));
  REQUIRE(seq.size() == 1);
  CHECK(seq[0] == std::vector<Atom>{TestAtom("pt", 1), TestAtom("fa", 0)});
}

TEST_CASE("validate_inout treats One and Zero as units") {
  // One is the empty test sequence.
  const auto one = validate_inout(One());
  REQUIRE(one.size() == 1);
  CHECK(one[0].empty());
  // Zero is the empty sum, also inside a sum.
  CHECK(validate_inout(Zero()).empty());
  CHECK(validate_inout(Or(Test("pt", 1), Zero())).size() == 1);
}

TEST_CASE("validate_inout rejects negation and non-test shapes") {
  CHECK_THROWS_AS(validate_inout(Not(Test("pt", 1))), NotInOut);
  CHECK_THROWS_AS(validate_inout(And(Test("pt", 1), Not(One()))), NotInOut);
  CHECK_THROWS_AS(validate_inout(And(Or(Test("pt", 1), Test("pt", 2)),
                                     Test("fa", 0))),
                  NotInOut);
  CHECK_THROWS_AS(validate_inout(And(Test("pt", 1), Zero())), NotInOut);
}
