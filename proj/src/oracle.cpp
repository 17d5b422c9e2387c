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

#include "popmatch/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace popmatch {
namespace {

void check_limit(const Instance& instance, std::size_t edge_limit) {
  if (instance.edge_count() > edge_limit) {
    throw TooLarge("instance has " + std::to_string(instance.edge_count()) +
                   " edges, enumeration limit is " + std::to_string(edge_limit));
  }
}

// All matchings with their partner tables, in enumeration order.
struct MatchingSpace {
  std::vector<Matching> matchings;
  std::vector<PartnerTable> tables;

  MatchingSpace(const Instance& instance, std::size_t edge_limit)
      : matchings(enumerate_matchings(instance, edge_limit)) {
    tables.reserve(matchings.size());
    for (const auto& m : matchings) tables.emplace_back(instance, m);
  }
};

// Index of the first N with delta(M, N) < 0; stops at the first hit.
std::optional<std::size_t> first_defeat(const Instance& instance, const PartnerTable& m,
                                        const MatchingSpace& space, VoteRule rule) {
  for (std::size_t i = 0; i < space.tables.size(); ++i) {
    if (delta(instance, m, space.tables[i], rule) < 0) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> by_size_descending(const MatchingSpace& space) {
  std::vector<std::size_t> order(space.matchings.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return space.matchings[a].size() > space.matchings[b].size();
  });
  return order;
}

bool augment(const Instance& instance, std::size_t u, std::vector<bool>& visited,
             std::vector<std::optional<std::size_t>>& w_mate) {
  for (EdgeIndex e : instance.incident({Side::u, u})) {
    const std::size_t w = instance.edge(e).w;
    if (visited[w]) continue;
    visited[w] = true;
    if (!w_mate[w] || augment(instance, *w_mate[w], visited, w_mate)) {
      w_mate[w] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

void for_each_matching(const Instance& instance,
                       const std::function<bool(const Matching&)>& visit,
                       std::size_t edge_limit) {
  check_limit(instance, edge_limit);
  std::vector<bool> u_used(instance.agents(Side::u).size(), false);
  std::vector<bool> w_used(instance.agents(Side::w).size(), false);
  std::vector<EdgeIndex> chosen;
  bool stop = false;

  std::function<void(EdgeIndex)> recurse = [&](EdgeIndex e) {
    if (stop) return;
    if (e == instance.edge_count()) {
      if (!visit(Matching(chosen))) stop = true;
      return;
    }
    recurse(e + 1);
    const Edge& edge = instance.edge(e);
    if (stop || u_used[edge.u] || w_used[edge.w]) return;
    u_used[edge.u] = w_used[edge.w] = true;
    chosen.push_back(e);
    recurse(e + 1);
    chosen.pop_back();
    u_used[edge.u] = w_used[edge.w] = false;
  };
  recurse(0);
}

std::vector<Matching> enumerate_matchings(const Instance& instance, std::size_t edge_limit) {
  std::vector<Matching> out;
  for_each_matching(
      instance,
      [&](const Matching& m) {
        out.push_back(m);
        return true;
      },
      edge_limit);
  return out;
}

PopularityVerdict certify_popular(const Instance& instance, const Matching& m, VoteRule rule,
                                  std::size_t edge_limit) {
  check_rule(instance, rule);
  PartnerTable mine(instance, m);
  MatchingSpace space(instance, edge_limit);
  PopularityVerdict verdict;
  for (std::size_t i = 0; i < space.tables.size(); ++i) {
    int d = delta(instance, mine, space.tables[i], rule);
    if (d < verdict.worst_delta) {
      verdict.worst_delta = d;
      verdict.counterexample = space.matchings[i];
    }
  }
  return verdict;
}

std::optional<Optimum> max_popular(const Instance& instance, VoteRule rule,
                                   std::size_t edge_limit) {
  check_rule(instance, rule);
  MatchingSpace space(instance, edge_limit);
  for (std::size_t i : by_size_descending(space)) {
    if (!first_defeat(instance, space.tables[i], space, rule)) {
      return Optimum{space.matchings[i].size(), space.matchings[i]};
    }
  }
  return std::nullopt;
}

std::optional<Optimum> max_stable(const Instance& instance, StabilityNotion notion,
                                  std::size_t edge_limit) {
  if (notion == StabilityNotion::gamma_min && instance.mode() != Mode::gamma) {
    throw RuleModeMismatch("gamma-min stability needs a gamma-mode instance");
  }
  std::optional<Optimum> best;
  for_each_matching(
      instance,
      [&](const Matching& m) {
        if ((!best || m.size() > best->size) && is_stable(instance, m, notion)) {
          best = Optimum{m.size(), m};
        }
        return true;
      },
      edge_limit);
  return best;
}

std::optional<Matching> super_popular_exists(const Instance& instance, std::size_t edge_limit) {
  return find_popular(
      instance, VoteRule::super, [](const Matching&) { return true; }, edge_limit);
}

std::optional<Matching> find_popular(const Instance& instance, VoteRule rule,
                                     const std::function<bool(const Matching&)>& accept,
                                     std::size_t edge_limit) {
  check_rule(instance, rule);
  MatchingSpace space(instance, edge_limit);
  for (std::size_t i = 0; i < space.matchings.size(); ++i) {
    if (!accept(space.matchings[i])) continue;
    if (!first_defeat(instance, space.tables[i], space, rule)) return space.matchings[i];
  }
  return std::nullopt;
}

std::size_t max_matching(const Instance& instance) {
  const std::size_t n_u = instance.agents(Side::u).size();
  const std::size_t n_w = instance.agents(Side::w).size();
  std::vector<std::optional<std::size_t>> w_mate(n_w);
  std::size_t size = 0;
  for (std::size_t u = 0; u < n_u; ++u) {
    std::vector<bool> visited(n_w, false);
    if (augment(instance, u, visited, w_mate)) ++size;
  }
  return size;
}

std::size_t min_maximal_matching(const Instance& instance, std::size_t edge_limit) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_matching(
      instance,
      [&](const Matching& m) {
        if (m.size() < best && is_maximal(instance, m)) best = m.size();
        return true;
      },
      edge_limit);
  return best;
}

}  // namespace popmatch
