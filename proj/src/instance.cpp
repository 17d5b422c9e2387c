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

#include "popmatch/instance.hpp"

#include <algorithm>
#include <cctype>

namespace popmatch {
namespace {

bool valid_token(std::string_view id) {
  if (id.empty()) return false;
  return std::none_of(id.begin(), id.end(), [](unsigned char c) {
    return std::isspace(c) || c == '#';
  });
}

void check_edge_values(Mode mode, const Edge& edge) {
  if (edge.p_u < 0 || edge.p_w < 0) {
    throw InvalidInstance("edge " + edge.id + ": negative valuation");
  }
  if (mode == Mode::weak) {
    if (edge.gamma_u || edge.gamma_w) {
      throw InvalidInstance("edge " + edge.id + ": thresholds given in weak mode");
    }
    return;
  }
  if (!edge.gamma_u || !edge.gamma_w) {
    throw InvalidInstance("edge " + edge.id + ": thresholds missing in gamma mode");
  }
  if (*edge.gamma_u <= 0 || *edge.gamma_w <= 0) {
    throw InvalidInstance("edge " + edge.id + ": non-positive threshold");
  }
}

}  // namespace

Instance::Instance(Mode mode, std::vector<std::string> u_agents,
                   std::vector<std::string> w_agents, std::vector<Edge> edges)
    : mode_(mode),
      u_agents_(std::move(u_agents)),
      w_agents_(std::move(w_agents)),
      edges_(std::move(edges)),
      u_incident_(u_agents_.size()),
      w_incident_(w_agents_.size()) {
  for (Side side : {Side::u, Side::w}) {
    const auto& names = agents(side);
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!valid_token(names[i])) throw InvalidInstance("invalid agent id '" + names[i] + "'");
      if (!agent_lookup_.emplace(names[i], AgentRef{side, i}).second) {
        throw InvalidInstance("duplicate agent id " + names[i]);
      }
    }
  }
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (!valid_token(edge.id)) throw InvalidInstance("invalid edge id '" + edge.id + "'");
    if (!edge_lookup_.emplace(edge.id, e).second) {
      throw InvalidInstance("duplicate edge id " + edge.id);
    }
    if (edge.u >= u_agents_.size() || edge.w >= w_agents_.size()) {
      throw InvalidInstance("edge " + edge.id + ": endpoint out of range");
    }
    check_edge_values(mode_, edge);
    u_incident_[edge.u].push_back(e);
    w_incident_[edge.w].push_back(e);
  }
}

std::optional<AgentRef> Instance::find_agent(std::string_view id) const {
  auto it = agent_lookup_.find(std::string(id));
  if (it == agent_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> Instance::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<AgentRef> Instance::all_agents() const {
  std::vector<AgentRef> out;
  out.reserve(agent_count());
  for (std::size_t i = 0; i < u_agents_.size(); ++i) out.push_back({Side::u, i});
  for (std::size_t i = 0; i < w_agents_.size(); ++i) out.push_back({Side::w, i});
  return out;
}

bool operator==(const Instance& a, const Instance& b) {
  return a.mode_ == b.mode_ && a.u_agents_ == b.u_agents_ && a.w_agents_ == b.w_agents_ &&
         a.edges_ == b.edges_;
}

InstanceBuilder& InstanceBuilder::add_agent(Side side, std::string id) {
  if (!valid_token(id)) throw InvalidInstance("invalid agent id '" + id + "'");
  auto& names = side == Side::u ? u_agents_ : w_agents_;
  if (!agents_.emplace(id, AgentRef{side, names.size()}).second) {
    throw InvalidInstance("duplicate agent id " + id);
  }
  names.push_back(std::move(id));
  return *this;
}

InstanceBuilder& InstanceBuilder::add_edge(std::string id, std::string_view u,
                                           std::string_view w, Rational p_u, Rational p_w,
                                           std::optional<Rational> gamma_u,
                                           std::optional<Rational> gamma_w) {
  if (!valid_token(id)) throw InvalidInstance("invalid edge id '" + id + "'");
  if (edge_ids_.contains(id)) throw InvalidInstance("duplicate edge id " + id);
  auto uit = agents_.find(std::string(u));
  if (uit == agents_.end() || uit->second.side != Side::u) {
    throw InvalidInstance("edge " + id + ": unknown U agent " + std::string(u));
  }
  auto wit = agents_.find(std::string(w));
  if (wit == agents_.end() || wit->second.side != Side::w) {
    throw InvalidInstance("edge " + id + ": unknown W agent " + std::string(w));
  }
  Edge edge{id, uit->second.index, wit->second.index, p_u, p_w, gamma_u, gamma_w};
  check_edge_values(mode_, edge);
  edge_ids_.emplace(id, edges_.size());
  edges_.push_back(std::move(edge));
  return *this;
}

Instance InstanceBuilder::build() const { return Instance(mode_, u_agents_, w_agents_, edges_); }

Matching::Matching(std::vector<EdgeIndex> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Matching::contains(EdgeIndex e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Matching matching_from_ids(const Instance& instance, std::span<const std::string> ids) {
  std::vector<EdgeIndex> edges;
  edges.reserve(ids.size());
  for (const auto& id : ids) {
    auto e = instance.find_edge(id);
    if (!e) throw InvalidMatching("unknown edge id " + id);
    edges.push_back(*e);
  }
  return Matching(std::move(edges));
}

std::vector<std::string> edge_ids(const Instance& instance, const Matching& matching) {
  std::vector<std::string> ids;
  ids.reserve(matching.size());
  for (EdgeIndex e : matching.edges()) ids.push_back(instance.edge(e).id);
  return ids;
}

PartnerTable::PartnerTable(const Instance& instance, const Matching& matching)
    : u_(instance.agents(Side::u).size()), w_(instance.agents(Side::w).size()) {
  for (EdgeIndex e : matching.edges()) {
    if (e >= instance.edge_count()) throw InvalidMatching("edge index out of range");
    const Edge& edge = instance.edge(e);
    if (u_[edge.u] || w_[edge.w]) {
      throw InvalidMatching("two matched edges meet at an endpoint of " + edge.id);
    }
    u_[edge.u] = e;
    w_[edge.w] = e;
  }
}

}  // namespace popmatch
