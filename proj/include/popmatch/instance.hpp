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

#ifndef POPMATCH_INSTANCE_HPP_
#define POPMATCH_INSTANCE_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "popmatch/errors.hpp"
#include "popmatch/rational.hpp"

namespace popmatch {

enum class Mode { weak, gamma };

enum class Side { u, w };

constexpr Side other(Side side) { return side == Side::u ? Side::w : Side::u; }

using EdgeIndex = std::size_t;

/// An agent is addressed by its side and its position in that side's list.
struct AgentRef {
  Side side;
  std::size_t index;

  friend auto operator<=>(const AgentRef&, const AgentRef&) = default;
};

struct Edge {
  std::string id;
  std::size_t u = 0;
  std::size_t w = 0;
  Rational p_u;
  Rational p_w;
  // Present iff the instance is in gamma mode.
  std::optional<Rational> gamma_u;
  std::optional<Rational> gamma_w;

  std::size_t endpoint(Side side) const { return side == Side::u ? u : w; }
  const Rational& value(Side side) const { return side == Side::u ? p_u : p_w; }
  const std::optional<Rational>& gamma(Side side) const {
    return side == Side::u ? gamma_u : gamma_w;
  }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Bipartite multigraph U x W with per-endpoint valuations, and per-endpoint
/// improvement thresholds in gamma mode. Immutable once built; the edge
/// listing order is part of the value and drives every tie-break.
class Instance {
 public:
  Instance() = default;

  /// Validates all invariants; throws InvalidInstance on the first breach.
  Instance(Mode mode, std::vector<std::string> u_agents,
           std::vector<std::string> w_agents, std::vector<Edge> edges);

  Mode mode() const { return mode_; }
  const std::vector<std::string>& agents(Side side) const {
    return side == Side::u ? u_agents_ : w_agents_;
  }
  std::size_t agent_count() const { return u_agents_.size() + w_agents_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& name(AgentRef agent) const { return agents(agent.side).at(agent.index); }
  /// Incident edges in listing order.
  std::span<const EdgeIndex> incident(AgentRef agent) const {
    return agent.side == Side::u ? u_incident_.at(agent.index) : w_incident_.at(agent.index);
  }

  std::optional<AgentRef> find_agent(std::string_view id) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;

  /// Every agent, U side first, each side in listing order.
  std::vector<AgentRef> all_agents() const;

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  Mode mode_ = Mode::weak;
  std::vector<std::string> u_agents_;
  std::vector<std::string> w_agents_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> u_incident_;
  std::vector<std::vector<EdgeIndex>> w_incident_;
  std::unordered_map<std::string, AgentRef> agent_lookup_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
};

/// Name-based incremental construction; each call validates what it can so
/// that a parser can attribute the failure to one input line.
class InstanceBuilder {
 public:
  explicit InstanceBuilder(Mode mode) : mode_(mode) {}

  InstanceBuilder& add_agent(Side side, std::string id);
  InstanceBuilder& add_edge(std::string id, std::string_view u, std::string_view w,
                            Rational p_u, Rational p_w,
                            std::optional<Rational> gamma_u = std::nullopt,
                            std::optional<Rational> gamma_w = std::nullopt);

  Instance build() const;

 private:
  Mode mode_;
  std::vector<std::string> u_agents_;
  std::vector<std::string> w_agents_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, AgentRef> agents_;
  std::unordered_map<std::string, EdgeIndex> edge_ids_;
};

/// A set of edges, kept sorted by edge index. Validity against an instance
/// is checked separately (is_valid / PartnerTable).
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<EdgeIndex> edges);

  std::span<const EdgeIndex> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(EdgeIndex e) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<EdgeIndex> edges_;
};

/// Looks a matching up by edge ids; throws InvalidMatching on an unknown id.
Matching matching_from_ids(const Instance& instance, std::span<const std::string> ids);
std::vector<std::string> edge_ids(const Instance& instance, const Matching& matching);

/// M(v) for every agent. Construction throws InvalidMatching when two edges
/// meet at one agent.
class PartnerTable {
 public:
  PartnerTable(const Instance& instance, const Matching& matching);

  std::optional<EdgeIndex> operator[](AgentRef agent) const {
    const auto& side = agent.side == Side::u ? u_ : w_;
    return side[agent.index];
  }

 private:
  std::vector<std::optional<EdgeIndex>> u_;
  std::vector<std::optional<EdgeIndex>> w_;
};

}  // namespace popmatch

#endif  // POPMATCH_INSTANCE_HPP_
