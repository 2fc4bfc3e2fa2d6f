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
#include "support/generators.hpp"

using namespace netkat;
using namespace netkat::testing;

namespace {

const FieldDomains kPorts{{{"pt", {1, 2, 3, 4, 5, 6}}}};

std::set<Value> star_heads(const Policy& p, Value start) {
  std::set<Value> heads;
  for (const History& h : eval_policy(p, {{{"pt", start}}}, kPorts)) {
    heads.insert(h.front().at("pt"));
  }
  return heads;
}

}  // namespace

TEST_CASE("eval_predicate follows the semantics clauses") {
  const Packet pk{{"pt", 1}};
  CHECK(eval_predicate(Test("pt", 1), pk));
  CHECK_FALSE(eval_predicate(Not(Test("pt", 1)), pk));
  CHECK_FALSE(eval_predicate(Or(Test("pt", 3), Test("pt", 4)),
                             Packet{{"pt", 5}}));
  CHECK(eval_predicate(And(One(), Test("pt", 1)), pk));
  CHECK_FALSE(eval_predicate(Zero(), pk));
  CHECK_THROWS_AS(eval_predicate(Test("zz", 1), pk), UndeclaredField);
}

TEST_CASE("eval_policy base clauses") {
  const History h{{{"pt", 1}}};
  CHECK(eval_policy(Mod("pt", 5), h, kPorts) == HistorySet{{{{"pt", 5}}}});
  CHECK(eval_policy(Filter(Test("pt", 2)), h, kPorts).empty());
  CHECK(eval_policy(Filter(Test("pt", 1)), h, kPorts) == HistorySet{h});
  // dup copies the current packet onto the history.
  CHECK(eval_policy(Dup(), h, kPorts) ==
        HistorySet{{{{"pt", 1}}, {{"pt", 1}}}});
  CHECK(eval_policy(Union(Mod("pt", 2), Mod("pt", 3)), h, kPorts) ==
        HistorySet{{{{"pt", 2}}}, {{{"pt", 3}}}});
  CHECK(eval_policy(Seq(Mod("pt", 2), Filter(Test("pt", 2))), h, kPorts) ==
        HistorySet{{{{"pt", 2}}}});
  CHECK_THROWS_AS(eval_policy(Mod("pt", 9), h, kPorts), DomainViolation);
  CHECK_THROWS_AS(eval_policy(Mod("zz", 1), h, kPorts), UndeclaredField);
}

TEST_CASE("star reaches its fixpoint over the packet space") {
  const Policy p1 = parse_policy(kPolicyP1);
  const Policy t = parse_policy(kTwoSwitchTopology);
  // p1.t maps port 1 to 6 and port 6 to 2; iteration adds nothing else.
  CHECK(star_heads(Star(Seq(p1, t)), 1) == std::set<Value>{1, 2, 6});
  // Interleaving p1 and t freely also passes through port 5.
  CHECK(star_heads(Star(Union(p1, t)), 1) == std::set<Value>{1, 2, 5, 6});
  CHECK(star_heads(Star(Filter(Zero())), 3) == std::set<Value>{3});
}

TEST_CASE("star over dup needs a bound and reports truncation") {
  const Policy looping = Star(Dup());
  const History h{{{"pt", 1}}};
  CHECK_THROWS_AS(eval_policy(looping, h, kPorts), UnboundedStar);
  bool truncated = false;
  const HistorySet bounded = eval_policy(looping, h, kPorts, 3, &truncated);
  CHECK(truncated);
  CHECK(bounded.size() == 4);  // lengths 1..4
  // A dup-free star stabilizes below any generous bound.
  truncated = true;
  eval_policy(Star(Mod("pt", 2)), h, kPorts, 100, &truncated);
  CHECK_FALSE(truncated);
}

TEST_CASE("sequencing is Kleisli composition and associativity holds") {
  Rng rng(7301);
  const FieldDomains dom{{{"pt", {0, 1}}, {"fa", {0, 1}}}};
  const std::vector<History> histories = all_histories(dom, 2);
  for (int i = 0; i < 100; ++i) {
    const Policy p = random_policy(rng, dom, 2);
    const Policy q = random_policy(rng, dom, 2);
    const Policy r = random_policy(rng, dom, 2);
    CHECK(semantically_equal(Seq(p, Seq(q, r)), Seq(Seq(p, q), r), dom,
                             histories));
  }
}

TEST_CASE("bounded star grows monotonically to the unbounded fixpoint") {
  Rng rng(7302);
  const FieldDomains dom{{{"pt", {0, 1, 2}}}};
  for (int i = 0; i < 60; ++i) {
    const Policy body = random_policy(rng, dom, 2, /*allow_dup=*/false);
    const History h{{{"pt", below(rng, 3)}}};
    const HistorySet full = eval_policy(Star(body), h, dom);
    HistorySet prev;
    for (std::uint64_t bound = 0; bound <= 3; ++bound) {
      const HistorySet part = eval_policy(Star(body), h, dom, bound);
      for (const History& x : prev) CHECK(part.count(x) == 1);
      for (const History& x : part) CHECK(full.count(x) == 1);
      prev = part;
    }
    // The packet space has 3 elements, so 3 iterations suffice.
    CHECK(eval_policy(Star(body), h, dom, 3) == full);
  }
}

TEST_CASE("is_semantically_empty matches the worked example") {
  const Policy p1 = parse_policy(kPolicyP1);
  const Policy t = parse_policy(kTwoSwitchTopology);
  const Policy safe = Seq(Seq(Filter(Test("pt", 1)), Star(Seq(p1, t))),
                          parse_policy("pt=3 + pt=4"));
  CHECK(is_semantically_empty(safe, kPorts));

  const Policy p12 = parse_policy(kPolicyP1P2);
  const Policy unsafe = Seq(Seq(Filter(Test("pt", 1)), Star(Seq(p12, t))),
                            parse_policy("pt=3 + pt=4"));
  CHECK_FALSE(is_semantically_empty(unsafe, kPorts));

  CHECK(is_semantically_empty(Filter(Zero()), kPorts));
  // Exactness needs a computable star; dup under star propagates.
  CHECK_THROWS_AS(is_semantically_empty(Star(Dup()), kPorts), UnboundedStar);
}

TEST_CASE("packet enumeration is lexicographic and total") {
  const FieldDomains dom{{{"b", {0, 1}}, {"a", {3, 5}}}};
  const std::vector<Packet> packets = dom.all_packets();
  REQUIRE(packets.size() == 4);
  CHECK(packets[0] == Packet{{"a", 3}, {"b", 0}});
  CHECK(packets[1] == Packet{{"a", 3}, {"b", 1}});
  CHECK(packets[2] == Packet{{"a", 5}, {"b", 0}});
  CHECK(packets[3] == Packet{{"a", 5}, {"b", 1}});
}

TEST_CASE("enumerate_loopfree_paths finds the hazardous paths") {
  const NetworkSpec bad = two_switch_spec(kPolicyP1P2, "pt=1", "pt=3 + pt=4");
  CHECK(enumerate_loopfree_paths(bad) ==
        std::set<std::vector<Value>>{{1, 5, 6, 4}});

  const NetworkSpec rev = two_switch_spec(kPolicyP1P2, "pt=3", "pt=1 + pt=2");
  CHECK(enumerate_loopfree_paths(rev) ==
        std::set<std::vector<Value>>{{3, 5, 6, 2}});

  const NetworkSpec good = two_switch_spec(kPolicyP1, "pt=1", "pt=3 + pt=4");
  CHECK(enumerate_loopfree_paths(good).empty());
}

TEST_CASE("a trivially hazardous ingress is a single-port path") {
  const NetworkSpec spec = two_switch_spec(kPolicyP1, "pt=3", "pt=3 + pt=4");
  CHECK(enumerate_loopfree_paths(spec) ==
        std::set<std::vector<Value>>{{3}});
}

TEST_CASE("axiom schemas are sound on random instances") {
  Rng rng(7303);
  const FieldDomains dom{{{"f", {0, 1, 2}}, {"g", {0, 1, 2}}}};
  const std::vector<History> histories = all_histories(dom, 2);
  for (int i = 0; i < 20; ++i) {
    for (const AxiomInstance& inst : axiom_instances(rng, dom)) {
      CAPTURE(inst.name);
      CHECK(axiom_holds(inst, dom, histories));
    }
  }
}

TEST_CASE("power expansions stay below the starred term") {
  Rng rng(7304);
  for (int i = 0; i < 30; ++i) {
    const NetworkSpec spec = random_spec(rng);
    const Policy starred = end_to_end_term(spec);
    Policy powered = spec.ingress;
    const Policy step = Union(Filter(One()), Seq(spec.policy, spec.topology));
    for (std::size_t k = 0; k < spec.hbh.size(); ++k) powered = Seq(powered, step);
    powered = Seq(powered, spec.egress);
    for (const Packet& pk : spec.domains.all_packets()) {
      const HistorySet small = eval_policy(powered, {pk}, spec.domains);
      const HistorySet big = eval_policy(starred, {pk}, spec.domains);
      for (const History& h : small) CHECK(big.count(h) == 1);
    }
  }
}
