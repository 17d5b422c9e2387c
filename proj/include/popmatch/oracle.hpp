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

#ifndef POPMATCH_ORACLE_HPP_
#define POPMATCH_ORACLE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "popmatch/instance.hpp"
#include "popmatch/stability.hpp"
#include "popmatch/vote.hpp"

namespace popmatch {

/// Exhaustive routines refuse instances with more edges than this unless the
/// caller raises the limit.
inline constexpr std::size_t kDefaultEdgeLimit = 24;

/// Visits every matching once, ∅ first, by include/exclude recursion over the
/// edges in listing order (exclude branch first). The visitor returns false
/// to stop early. Throws TooLarge above `edge_limit`.
void for_each_matching(const Instance& instance,
                       const std::function<bool(const Matching&)>& visit,
                       std::size_t edge_limit = kDefaultEdgeLimit);

std::vector<Matching> enumerate_matchings(const Instance& instance,
                                          std::size_t edge_limit = kDefaultEdgeLimit);

struct PopularityVerdict {
  /// The first matching in enumeration order attaining the minimum of
  /// delta(M, N); absent when M is popular.
  std::optional<Matching> counterexample;
  /// min over N of delta(M, N); 0 when M is popular (N = M attains it).
  int worst_delta = 0;

  bool popular() const { return !counterexample; }
};

PopularityVerdict certify_popular(const Instance& instance, const Matching& m, VoteRule rule,
                                  std::size_t edge_limit = kDefaultEdgeLimit);

struct Optimum {
  std::size_t size = 0;
  Matching witness;
};

/// Largest matching popular under the rule, the earliest-enumerated one
/// among those of maximum size. nullopt when no popular matching exists
/// (possible for classic and super with ties).
std::optional<Optimum> max_popular(const Instance& instance, VoteRule rule,
                                   std::size_t edge_limit = kDefaultEdgeLimit);

/// Largest matching with no blocking edge under the notion. nullopt only for
/// super-stability, which may not exist.
std::optional<Optimum> max_stable(const Instance& instance, StabilityNotion notion,
                                  std::size_t edge_limit = kDefaultEdgeLimit);

/// First super-popular matching in enumeration order, if any.
std::optional<Matching> super_popular_exists(const Instance& instance,
                                             std::size_t edge_limit = kDefaultEdgeLimit);

/// First matching in enumeration order that satisfies `accept` and is
/// popular under the rule.
std::optional<Matching> find_popular(const Instance& instance, VoteRule rule,
                                     const std::function<bool(const Matching&)>& accept,
                                     std::size_t edge_limit = kDefaultEdgeLimit);

/// Maximum cardinality via augmenting paths from the U side. Polynomial; no
/// edge limit.
std::size_t max_matching(const Instance& instance);

/// Smallest maximal matching, by enumeration.
std::size_t min_maximal_matching(const Instance& instance,
                                 std::size_t edge_limit = kDefaultEdgeLimit);

}  // namespace popmatch

#endif  // POPMATCH_ORACLE_HPP_
