// Copyright 2026 The popmatch Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "popmatch/vote.hpp"

namespace popmatch {
namespace {

// Orders two (possibly empty) slots of one agent by value: <0, 0, >0.
int compare_slots(const Instance& instance, AgentRef agent, std::optional<EdgeIndex> a,
                  std::optional<EdgeIndex> b) {
  if (!a && !b) return 0;
  if (!a) return -1;
  if (!b) return 1;
  const Rational& va = instance.edge(*a).value(agent.side);
  const Rational& vb = instance.edge(*b).value(agent.side);
  if (va < vb) return -1;
  return va > vb ? 1 : 0;
}

}  // namespace

std::optional<VoteRule> parse_vote_rule(std::string_view text) {
  if (text == "classic") return VoteRule::classic;
  if (text == "weak") return VoteRule::weak;
  if (text == "gamma") return VoteRule::gamma;
  if (text == "super") return VoteRule::super;
  return std::nullopt;
}

std::string to_string(VoteRule rule) {
  switch (rule) {
    case VoteRule::classic: return "classic";
    case VoteRule::weak: return "weak";
    case VoteRule::gamma: return "gamma";
    case VoteRule::super: return "super";
  }
  return "?";
}

VoteRule rule_of(Mode mode) { return mode == Mode::gamma ? VoteRule::gamma : VoteRule::weak; }

void check_rule(const Instance& instance, VoteRule rule) {
  if (rule == VoteRule::gamma && instance.mode() != Mode::gamma) {
    throw RuleModeMismatch("gamma vote rule needs a gamma-mode instance");
  }
}

Vote vote(const Instance& instance, AgentRef agent, const PartnerTable& m,
          const PartnerTable& n, VoteRule rule) {
  check_rule(instance, rule);
  const auto mine = m[agent];
  const auto theirs = n[agent];
  if (rule == VoteRule::classic) {
    int c = compare_slots(instance, agent, mine, theirs);
    return c == 0 ? Vote::none : (c > 0 ? Vote::for_m : Vote::for_n);
  }
  if (mine == theirs) return Vote::none;
  switch (rule) {
    case VoteRule::weak:
      return compare_slots(instance, agent, theirs, mine) > 0 ? Vote::for_n : Vote::for_m;
    case VoteRule::super:
      return compare_slots(instance, agent, mine, theirs) > 0 ? Vote::for_m : Vote::for_n;
    case VoteRule::gamma: {
      if (!theirs) return Vote::for_m;
      if (!mine) return Vote::for_n;
      const Edge& n_edge = instance.edge(*theirs);
      const Rational& current = instance.edge(*mine).value(agent.side);
      return n_edge.value(agent.side) >= current + *n_edge.gamma(agent.side) ? Vote::for_n
                                                                              : Vote::for_m;
    }
    case VoteRule::classic: break;
  }
  return Vote::none;
}

Vote vote(const Instance& instance, AgentRef agent, const Matching& m, const Matching& n,
          VoteRule rule) {
  return vote(instance, agent, PartnerTable(instance, m), PartnerTable(instance, n), rule);
}

int delta(const Instance& instance, const PartnerTable& m, const PartnerTable& n,
          VoteRule rule) {
  check_rule(instance, rule);
  int total = 0;
  for (Side side : {Side::u, Side::w}) {
    for (std::size_t i = 0; i < instance.agents(side).size(); ++i) {
      total += to_int(vote(instance, {side, i}, m, n, rule));
    }
  }
  return total;
}

int delta(const Instance& instance, const Matching& m, const Matching& n, VoteRule rule) {
  return delta(instance, PartnerTable(instance, m), PartnerTable(instance, n), rule);
}

}  // namespace popmatch
