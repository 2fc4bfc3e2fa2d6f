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

#include "netkat/semantics.hpp"

#include <algorithm>
#include <cassert>

#include "netkat/errors.hpp"
#include "netkat/network.hpp"

namespace netkat {

bool FieldDomains::in_domain(const Field& f, Value v) const {
  auto it = domains.find(f);
  return it != domains.end() && it->second.count(v) > 0;
}

std::vector<Packet> FieldDomains::all_packets() const {
  std::vector<Packet> packets;
  packets.emplace_back();
  for (const auto& [field, values] : domains) {
    std::vector<Packet> next;
    next.reserve(packets.size() * values.size());
    for (const Packet& pk : packets) {
      for (Value v : values) {
        Packet extended = pk;
        extended[field] = v;
        next.push_back(std::move(extended));
      }
    }
    packets = std::move(next);
  }
  return packets;
}

bool eval_predicate(const Predicate& a, const Packet& pk) {
  switch (a.kind()) {
    case Predicate::Kind::kZero:
      return false;
    case Predicate::Kind::kOne:
      return true;
    case Predicate::Kind::kTest: {
      auto it = pk.find(a.field());
      if (it == pk.end()) throw UndeclaredField(a.field());
      return it->second == a.value();
    }
    case Predicate::Kind::kNeg:
      return !eval_predicate(a.left(), pk);
    case Predicate::Kind::kOr: {
      // Both sides evaluate so that field errors surface deterministically.
      const bool l = eval_predicate(a.left(), pk);
      const bool r = eval_predicate(a.right(), pk);
      return l || r;
    }
    case Predicate::Kind::kAnd: {
      const bool l = eval_predicate(a.left(), pk);
      const bool r = eval_predicate(a.right(), pk);
      return l && r;
    }
  }
  return false;
}

namespace {

struct EvalContext {
  const FieldDomains& dom;
  std::optional<std::uint64_t> star_bound;
  bool truncated = false;
};

HistorySet eval(const Policy& p, const History& h, EvalContext& ctx) {
  assert(!h.empty());
  switch (p.kind()) {
    case Policy::Kind::kFilter:
      if (eval_predicate(p.predicate(), h.front())) return {h};
      return {};
    case Policy::Kind::kMod: {
      if (h.front().count(p.field()) == 0) throw UndeclaredField(p.field());
      if (!ctx.dom.in_domain(p.field(), p.value())) {
        throw DomainViolation(p.field(), p.value());
      }
      History out = h;
      out.front()[p.field()] = p.value();
      return {std::move(out)};
    }
    case Policy::Kind::kUnion: {
      HistorySet out = eval(p.left(), h, ctx);
      HistorySet rhs = eval(p.right(), h, ctx);
      out.insert(rhs.begin(), rhs.end());
      return out;
    }
    case Policy::Kind::kSeq: {
      // Kleisli composition: feed every intermediate history to the right.
      HistorySet out;
      for (const History& mid : eval(p.left(), h, ctx)) {
        HistorySet rhs = eval(p.right(), mid, ctx);
        out.insert(rhs.begin(), rhs.end());
      }
      return out;
    }
    case Policy::Kind::kStar: {
      const Policy body = p.left();
      if (contains_dup(body) && !ctx.star_bound.has_value()) {
        throw UnboundedStar();
      }
      // Accumulate F^0 h, F^1 h, ... until no new history appears. The
      // frontier holds the histories produced exactly i steps ago.
      HistorySet acc = {h};
      HistorySet frontier = acc;
      std::uint64_t iterations = 0;
      while (!frontier.empty()) {
        if (ctx.star_bound.has_value() && iterations == *ctx.star_bound) {
          ctx.truncated = true;
          break;
        }
        HistorySet fresh;
        for (const History& x : frontier) {
          for (History y : eval(body, x, ctx)) {
            if (acc.count(y) == 0) fresh.insert(std::move(y));
          }
        }
        acc.insert(fresh.begin(), fresh.end());
        frontier = std::move(fresh);
        ++iterations;
      }
      return acc;
    }
    case Policy::Kind::kDup: {
      History out = h;
      out.insert(out.begin(), h.front());
      return {std::move(out)};
    }
  }
  return {};
}

}  // namespace

HistorySet eval_policy(const Policy& p, const History& h,
                       const FieldDomains& dom,
                       std::optional<std::uint64_t> star_bound,
                       bool* truncated) {
  EvalContext ctx{dom, star_bound};
  HistorySet out = eval(p, h, ctx);
  if (truncated != nullptr) *truncated = ctx.truncated;
  return out;
}

bool is_semantically_empty(const Policy& p, const FieldDomains& dom) {
  for (const Packet& pk : dom.all_packets()) {
    if (!eval_policy(p, {pk}, dom).empty()) return false;
  }
  return true;
}

namespace {

bool satisfies_disjuncts(const std::vector<std::vector<Atom>>& disjuncts,
                         const Packet& pk) {
  for (const std::vector<Atom>& tests : disjuncts) {
    bool all = true;
    for (const Atom& t : tests) {
      auto it = pk.find(t.field);
      if (it == pk.end()) throw UndeclaredField(t.field);
      if (it->second != t.value) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

struct PathSearch {
  const NetworkSpec& spec;
  std::set<std::vector<Value>>& out;
  std::set<Packet> visited;
  std::vector<Value> ports;

  void dfs(const Packet& pk) {
    if (satisfies_disjuncts(spec.egress_disjuncts, pk)) out.insert(ports);
    for (const HbhSummand& summand : spec.hbh.summands) {
      // Apply the summand semantically; it yields at most one packet.
      HistorySet mids =
          eval_policy(rebuild_summand(summand), {pk}, spec.domains);
      if (mids.empty()) continue;
      assert(mids.size() == 1);
      const Packet mid = mids.begin()->front();
      const Value assigned = mid.at(spec.port_field);

      HistorySet nexts = eval_policy(spec.topology, {mid}, spec.domains);
      if (nexts.empty()) continue;  // no topology summand at this port
      assert(nexts.size() == 1);
      Packet next = nexts.begin()->front();

      // The visited ports of this hop: the policy assignment, then the link
      // target when the topology moved the packet. The link table decides
      // which case applies; it mirrors the validated topology term.
      std::size_t pushed = 1;
      ports.push_back(assigned);
      if (spec.topo.link_target(assigned).has_value()) {
        ports.push_back(next.at(spec.port_field));
        pushed = 2;
      }
      if (visited.insert(next).second) {
        dfs(next);
        visited.erase(next);
      }
      ports.resize(ports.size() - pushed);
    }
  }
};

}  // namespace

std::set<std::vector<Value>> enumerate_loopfree_paths(
    const NetworkSpec& spec) {
  std::set<std::vector<Value>> out;
  for (const Packet& pk : spec.domains.all_packets()) {
    if (!satisfies_disjuncts(spec.ingress_disjuncts, pk)) continue;
    PathSearch search{spec, out, {pk}, {pk.at(spec.port_field)}};
    search.dfs(pk);
  }
  return out;
}

Policy end_to_end_term(const NetworkSpec& spec) {
  return Seq(Seq(spec.ingress, Star(Seq(spec.policy, spec.topology))),
             spec.egress);
}

}  // namespace netkat
