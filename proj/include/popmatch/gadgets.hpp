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

#ifndef POPMATCH_GADGETS_HPP_
#define POPMATCH_GADGETS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "popmatch/instance.hpp"
#include "popmatch/oracle.hpp"

namespace popmatch {

/// A strict-preference instance with one forbidden edge (x, y) and one
/// forced agent t. x must be a leaf, y must have exactly one other neighbour
/// z, and y and z must rank each other first.
struct PmRestrictedInstance {
  Instance base;
  EdgeIndex forbidden_edge = 0;
  AgentRef forced_vertex{Side::u, 0};
};

/// Ends of the forbidden edge after the precondition check.
struct ForbiddenEnds {
  AgentRef x;
  AgentRef y;
  AgentRef z;
};

/// Throws PreconditionViolated naming the first broken condition.
ForbiddenEnds check_pm_restricted(const PmRestrictedInstance& p);

/// Instance format plus `forbidden <edge-id>` and `forced <agent-id>` lines.
PmRestrictedInstance parse_pm_restricted(std::string_view text);
std::string write_pm_restricted(const PmRestrictedInstance& p);

/// Adds for every u_i a fresh W agent z_i ranked first by u_i, and a U leaf
/// z_i' behind u_i on z_i's list. The input must be weak mode with |U| = |W|
/// and ties on the W side only. Maximum weakly popular size of the result is
/// n + maximum weakly stable size of the input.
Instance gadget_smti(const Instance& smti);

/// Builds the weak instance from a bipartite graph with |U| = |W| = n, n
/// even (valuations of the input are ignored):
///   u_i: [N(u_i)] > [U'],  w_i: [N(w_i)] > w_i',  w_i': w_i,
///   u'_j: z_j > [U],  z_j: u'_j > z'_j,  z'_j: z_j     (j <= n/2)
/// with brackets marking a single tie.
Instance gadget_inapprox(const Instance& graph);

/// Adds d_x, x', d_t, t' with edges (x, d_x), (x', d_x), (t, d_t), (t', d_t):
/// d_x ranks x > x', d_t ties t ~ t', t ranks d_t last, and x ties d_x with y.
Instance gadget_superpm(const PmRestrictedInstance& p);

/// Brute force: a classically popular matching of the base that avoids the
/// forbidden edge and covers the forced agent.
std::optional<Matching> restricted_popular_exists(const PmRestrictedInstance& p,
                                                  std::size_t edge_limit = kDefaultEdgeLimit);

struct TieAudit {
  AgentRef agent;
  std::vector<std::size_t> tie_lengths;
};

/// Agents with at least two incident edges of equal value, and the size of
/// every such group.
std::vector<TieAudit> audit_ties(const Instance& instance);

enum class Fixture { example1, example2, example3 };

std::optional<Fixture> parse_fixture(std::string_view name);

/// Path instances u_1 w_1 ... with E = {e_i = (u_i, w_i)} and
/// F = {f_i = (u_i, w_{i+1})}, F listed first so that ties at w_i resolve
/// toward the f edge.
Instance fixture(Fixture which);
/// fixture() serialized with a short explanatory comment header.
std::string fixture_text(Fixture which);

struct RandomInstanceParams {
  std::size_t u_count = 3;
  std::size_t w_count = 3;
  double edge_prob = 0.5;
  std::vector<Rational> value_levels = {Rational(1), Rational(2)};
  /// Empty selects weak mode.
  std::vector<Rational> gamma_levels;
  /// Make every U agent's valuations distinct (ties on the W side only).
  bool one_sided_ties = false;
  /// Chance of a second parallel edge for each drawn pair.
  double parallel_prob = 0.0;
  /// 0 means unbounded; otherwise surplus edges are dropped at random.
  std::size_t max_edges = 0;
  std::uint64_t seed = 0;
};

/// Deterministic per parameter set, on every platform.
Instance random_instance(const RandomInstanceParams& params);

}  // namespace popmatch

#endif  // POPMATCH_GADGETS_HPP_
