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

#ifndef NETKAT_NETWORK_HPP_
#define NETKAT_NETWORK_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "netkat/ast.hpp"
#include "netkat/semantics.hpp"
#include "netkat/validate.hpp"

namespace netkat {

// The raw sections of a network spec file, before term parsing.
struct NetworkSpecSource {
  std::map<Field, std::set<Value>> field_domains;
  Field port_field = "pt";
  std::string policy_text;
  std::string topology_text;
  std::string ingress_text;
  std::string egress_text;
};

// A fully parsed and validated network: the pieces of in.(p.t)*.out together
// with the structures the pipeline and the oracle work from.
struct NetworkSpec {
  FieldDomains domains;
  Field port_field;

  Policy policy;    // hop-by-hop switch policy p
  Policy topology;  // topology term t
  Policy ingress;   // in, as a policy-level sum of test sequences
  Policy egress;    // out, the hazardous egress

  HbhInfo hbh;
  TopologyInfo topo;
  std::vector<std::vector<Atom>> ingress_disjuncts;
  std::vector<std::vector<Atom>> egress_disjuncts;
};

// The end-to-end behaviour in.(p.t)*.out.
Policy end_to_end_term(const NetworkSpec& spec);

}  // namespace netkat

#endif  // NETKAT_NETWORK_HPP_
