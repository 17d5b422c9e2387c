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

#ifndef POPMATCH_VOTE_HPP_
#define POPMATCH_VOTE_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "popmatch/instance.hpp"

namespace popmatch {

/// How an agent compares its edge in M with its edge in N.
///  classic: sign of the value difference.
///  weak:    a different partner of equal value counts for M.
///  gamma:   N wins only with an improvement of at least the N-edge threshold.
///  super:   any different partner of at least equal value counts for N.
enum class VoteRule { classic, weak, gamma, super };

/// +1: the agent prefers M, -1: prefers N, 0: indifferent under the rule.
enum class Vote : int { for_n = -1, none = 0, for_m = 1 };

constexpr int to_int(Vote v) { return static_cast<int>(v); }

std::optional<VoteRule> parse_vote_rule(std::string_view text);
std::string to_string(VoteRule rule);

/// weak mode -> weak, gamma mode -> gamma.
VoteRule rule_of(Mode mode);

/// Throws RuleModeMismatch for the gamma rule on a weak-mode instance.
void check_rule(const Instance& instance, VoteRule rule);

/// An unmatched agent values its empty slot strictly below every edge, by
/// more than any threshold.
Vote vote(const Instance& instance, AgentRef agent, const PartnerTable& m,
          const PartnerTable& n, VoteRule rule);
Vote vote(const Instance& instance, AgentRef agent, const Matching& m, const Matching& n,
          VoteRule rule);

/// Sum of votes over all agents; positive means M wins the head-to-head.
int delta(const Instance& instance, const PartnerTable& m, const PartnerTable& n,
          VoteRule rule);
int delta(const Instance& instance, const Matching& m, const Matching& n, VoteRule rule);

}  // namespace popmatch

#endif  // POPMATCH_VOTE_HPP_
