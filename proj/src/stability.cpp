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

#include "popmatch/stability.hpp"

namespace popmatch {
namespace {

bool improves(const Instance& instance, const Edge& edge, AgentRef agent,
              std::optional<EdgeIndex> current, StabilityNotion notion) {
  if (!current) return true;
  const Rational& now = instance.edge(*current).value(agent.side);
  const Rational& candidate = edge.value(agent.side);
  switch (notion) {
    case StabilityNotion::weak_stable: return candidate > now;
    case StabilityNotion::super: return candidate >= now;
    case StabilityNotion::gamma_min: return candidate >= now + *edge.gamma(agent.side);
  }
  return false;
}

}  // namespace

std::optional<StabilityNotion> parse_stability_notion(std::string_view text) {
  if (text == "weak-stable") return StabilityNotion::weak_stable;
  if (text == "gamma-min") return StabilityNotion::gamma_min;
  if (text == "super") return StabilityNotion::super;
  return std::nullopt;
}

std::string to_string(StabilityNotion notion) {
  switch (notion) {
    case StabilityNotion::weak_stable: return "weak-stable";
    case StabilityNotion::gamma_min: return "gamma-min";
    case StabilityNotion::super: return "super";
  }
  return "?";
}

StabilityNotion notion_of(Mode mode) {
  return mode == Mode::gamma ? StabilityNotion::gamma_min : StabilityNotion::weak_stable;
}

std::vector<EdgeIndex> blocking_edges(const Instance& instance, const Matching& m,
                                      StabilityNotion notion) {
  if (notion == StabilityNotion::gamma_min && instance.mode() != Mode::gamma) {
    throw RuleModeMismatch("gamma-min stability needs a gamma-mode instance");
  }
  PartnerTable partners(instance, m);
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < instance.edge_count(); ++e) {
    if (m.contains(e)) continue;
    const Edge& edge = instance.edge(e);
    AgentRef u{Side::u, edge.u};
    AgentRef w{Side::w, edge.w};
    if (improves(instance, edge, u, partners[u], notion) &&
        improves(instance, edge, w, partners[w], notion)) {
      out.push_back(e);
    }
  }
  return out;
}

bool is_stable(const Instance& instance, const Matching& m, StabilityNotion notion) {
  return blocking_edges(instance, m, notion).empty();
}

bool is_maximal(const Instance& instance, const Matching& m) {
  PartnerTable partners(instance, m);
  for (const Edge& edge : instance.edges()) {
    if (!partners[{Side::u, edge.u}] && !partners[{Side::w, edge.w}]) return false;
  }
  return true;
}

bool is_valid(const Instance& instance, const Matching& m) {
  try {
    PartnerTable partners(instance, m);
  } catch (const InvalidMatching&) {
    return false;
  }
  return true;
}

}  // namespace popmatch
