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

#ifndef NETKAT_SEMANTICS_HPP_
#define NETKAT_SEMANTICS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "netkat/ast.hpp"

namespace netkat {

// A packet is a total valuation of the declared fields.
using Packet = std::map<Field, Value>;

// A history is a nonempty packet list; front() is the current packet.
using History = std::vector<Packet>;

using HistorySet = std::set<History>;

// The finite value universe, one nonempty set per declared field.
struct FieldDomains {
  std::map<Field, std::set<Value>> domains;

  bool declares(const Field& f) const { return domains.count(f) > 0; }
  bool in_domain(const Field& f, Value v) const;

  // Every packet over the declared domains, ordered lexicographically by
  // field name and then value.
  std::vector<Packet> all_packets() const;
};

// Predicate evaluation on the current packet.
// Throws UndeclaredField when a tested field is missing from the packet.
bool eval_predicate(const Predicate& a, const Packet& pk);

// Denotational evaluation: the set of histories p produces from h. Star is
// the union of iterated applications, computed to a fixpoint. When the body
// of a star contains dup the fixpoint may not exist; callers must then pass
// star_bound, and *truncated reports whether iteration was cut short.
HistorySet eval_policy(const Policy& p, const History& h,
                       const FieldDomains& dom,
                       std::optional<std::uint64_t> star_bound = std::nullopt,
                       bool* truncated = nullptr);

// True iff p drops every single-packet history over the declared domains.
// Exact for star-free or dup-free policies; otherwise UnboundedStar
// propagates from the evaluator.
bool is_semantically_empty(const Policy& p, const FieldDomains& dom);

struct NetworkSpec;

// Brute-force reachability oracle. Nodes are packets; edges apply one
// hop-by-hop summand and then the topology, both evaluated semantically.
// Returns every simple (no repeated packet) path from an ingress-satisfying
// packet to an egress-satisfying one, as the sequence of port values visited:
// the ingress port followed by each assigned port.
std::set<std::vector<Value>> enumerate_loopfree_paths(const NetworkSpec& spec);

}  // namespace netkat

#endif  // NETKAT_SEMANTICS_HPP_
