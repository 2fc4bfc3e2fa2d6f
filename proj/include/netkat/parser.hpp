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

#ifndef NETKAT_PARSER_HPP_
#define NETKAT_PARSER_HPP_

#include <optional>
#include <string>

#include "netkat/ast.hpp"
#include "netkat/errors.hpp"
#include "netkat/network.hpp"

namespace netkat {

// Parses the concrete policy syntax:
//
//   atoms      0  1  dup  f=v  f<-v
//   operators  !a (predicates only)   p* (tightest)   p.q or p;q   p+q
//
// Whitespace is insignificant; parentheses group. Negating a subterm that is
// not a predicate is a parse error. All failures throw a located ParseError.
Policy parse_policy(const std::string& text);

// parse_policy, then conversion to a predicate; throws ParseError when the
// term contains modifications, star, or dup.
Predicate parse_predicate(const std::string& text);

// Reads a policy built purely from filters, + and . as a predicate.
std::optional<Predicate> policy_to_predicate(const Policy& p);

// Minimal-parenthesization pretty printer; parse_policy(render_policy(p))
// reproduces p structurally for every parser-producible term.
std::string render_policy(const Policy& p);
std::string render_predicate(const Predicate& a);

std::string render_atom(const Atom& atom);
// "0" for the zero word, "1" for the empty word, dot-joined atoms otherwise.
std::string render_word(const Word& w);

// Splits a network spec file into its sections (see README for the format)
// without parsing the four terms.
NetworkSpecSource parse_network_spec_source(const std::string& text);

// Parses the four terms of a source bundle, checks every field and value
// against the declared domains, and runs the hop-by-hop, topology and
// ingress/egress shape validations.
NetworkSpec assemble_network_spec(const NetworkSpecSource& source);

// parse_network_spec_source + assemble_network_spec, with term error spans
// rebased onto the file.
NetworkSpec parse_network_spec(const std::string& text);

NetworkSpec load_network_spec_file(const std::string& path);

}  // namespace netkat

#endif  // NETKAT_PARSER_HPP_
