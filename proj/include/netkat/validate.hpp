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

#ifndef NETKAT_VALIDATE_HPP_
#define NETKAT_VALIDATE_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "netkat/ast.hpp"

namespace netkat {

// One hop-by-hop summand: a sequence of positive tests followed by a single
// assignment to the port field.
struct HbhSummand {
  std::vector<Atom> tests;  // test atoms only
  Atom assignment;          // mod atom on the port field

  friend bool operator==(const HbhSummand&, const HbhSummand&) = default;
};

// Parsed structure of a validated hop-by-hop policy. size() counts the
// summands as written (duplicates included); that raw count is the n used by
// star elimination. distinct_size() is the deduplicated count, kept for
// reporting.
struct HbhInfo {
  std::vector<HbhSummand> summands;

  std::size_t size() const { return summands.size(); }
  std::size_t distinct_size() const;
};

// Parsed structure of a validated topology term. Every port value occurs at
// most once as a link source or perimeter port, so the topology acts as a
// deterministic partial function on ports.
struct TopologyInfo {
  std::vector<std::pair<Value, Value>> internal_links;  // (from, to)
  std::set<Value> perimeter_ports;

  bool is_perimeter(Value port) const {
    return perimeter_ports.count(port) > 0;
  }
  std::optional<Value> link_target(Value from) const;
};

// Checks that p is a sum of summands of shape (positive tests).(pt<-v) and
// returns the parsed structure. Throws NotHbH otherwise.
HbhInfo validate_hbh(const Policy& p, const Field& port_field);

// Checks that every summand of t is an internal link pt=v.pt<-v' or a
// perimeter filter pt=v, with pairwise distinct source ports. Throws
// NotTopology otherwise.
TopologyInfo validate_topology(const Policy& t, const Field& port_field);

// Checks that a is a sum of sequences of positive tests and returns the
// disjunct list. One is the empty test sequence; Zero is the empty sum.
// Throws NotInOut otherwise.
std::vector<std::vector<Atom>> validate_inout(const Predicate& a);

// Left-associative rebuilds, inverse to validation on parser-shaped input.
Policy rebuild_summand(const HbhSummand& summand);
Policy rebuild_hbh(const HbhInfo& info);

}  // namespace netkat

#endif  // NETKAT_VALIDATE_HPP_
