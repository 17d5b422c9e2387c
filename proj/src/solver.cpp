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

#include "popmatch/solver.hpp"

#include <algorithm>
#include <deque>

#include "popmatch/io.hpp"

namespace popmatch {

StrictMatching::StrictMatching(std::vector<EdgeCopy> copies) : copies_(std::move(copies)) {
  std::sort(copies_.begin(), copies_.end());
  copies_.erase(std::unique(copies_.begin(), copies_.end()), copies_.end());
}

bool StrictMatching::contains(EdgeCopy copy) const {
  return std::binary_search(copies_.begin(), copies_.end(), copy);
}

StrictMatching gale_shapley(const DuplicatedInstance& dup) {
  const Instance& instance = dup.base();
  const std::size_t n_u = instance.agents(Side::u).size();
  const std::size_t n_w = instance.agents(Side::w).size();

  std::vector<std::size_t> next(n_u, 0);
  std::vector<std::optional<EdgeCopy>> held(n_w);
  std::deque<std::size_t> free;
  for (std::size_t u = 0; u < n_u; ++u) free.push_back(u);

  while (!free.empty()) {
    const std::size_t u = free.front();
    free.pop_front();
    auto list = dup.preferences({Side::u, u});
    while (next[u] < list.size()) {
      const EdgeCopy offer = list[next[u]++];
      if (offer.edge >= instance.edge_count()) continue;
      const AgentRef w{Side::w, instance.edge(offer.edge).w};
      if (!dup.prefers(w, offer, held[w.index])) continue;
      if (held[w.index]) free.push_back(instance.edge(held[w.index]->edge).u);
      held[w.index] = offer;
      break;
    }
  }

  std::vector<EdgeCopy> copies;
  for (const auto& h : held) {
    if (h) copies.push_back(*h);
  }
  return StrictMatching(std::move(copies));
}

std::vector<EdgeCopy> check_strict_stability(const DuplicatedInstance& dup,
                                             const StrictMatching& assignment) {
  const Instance& instance = dup.base();
  std::vector<std::optional<EdgeCopy>> u_has(instance.agents(Side::u).size());
  std::vector<std::optional<EdgeCopy>> w_has(instance.agents(Side::w).size());
  for (EdgeCopy copy : assignment.copies()) {
    if (copy.edge >= instance.edge_count()) throw InvalidAssignment("copy of unknown edge");
    const Edge& edge = instance.edge(copy.edge);
    const std::string label = to_string(instance, copy);
    if (u_has[edge.u] || w_has[edge.w]) {
      throw InvalidAssignment("agent used twice at " + label);
    }
    if (!dup.rank({Side::u, edge.u}, copy) || !dup.rank({Side::w, edge.w}, copy)) {
      throw InvalidAssignment(label + " is missing from an endpoint's list");
    }
    u_has[edge.u] = copy;
    w_has[edge.w] = copy;
  }

  std::vector<EdgeCopy> blocking;
  for (EdgeIndex e = 0; e < instance.edge_count(); ++e) {
    const Edge& edge = instance.edge(e);
    for (CopyType type : kCopyTypes) {
      const EdgeCopy copy{e, type};
      if (assignment.contains(copy)) continue;
      if (dup.prefers({Side::u, edge.u}, copy, u_has[edge.u]) &&
          dup.prefers({Side::w, edge.w}, copy, w_has[edge.w])) {
        blocking.push_back(copy);
      }
    }
  }
  return blocking;
}

Matching project(const StrictMatching& assignment) {
  std::vector<EdgeIndex> edges;
  edges.reserve(assignment.size());
  for (EdgeCopy copy : assignment.copies()) edges.push_back(copy.edge);
  return Matching(std::move(edges));
}

Solution solve_with_certificate(const Instance& instance) {
  StrictMatching certificate = gale_shapley(build_duplicated(instance));
  Matching matching = project(certificate);
  return {std::move(certificate), std::move(matching)};
}

Matching solve(const Instance& instance) { return solve_with_certificate(instance).matching; }

StrictMatching parse_strict_matching(const Instance& instance, std::string_view text) {
  std::vector<EdgeCopy> copies;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto tokens = tokenize_line(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (tokens.empty() || tokens[0] == "size") continue;
    if (tokens.size() != 1) throw ParseError(line_no, "expected one token per line");
    if (auto copy = parse_edge_copy(instance, tokens[0])) {
      copies.push_back(*copy);
    } else if (!instance.find_edge(tokens[0])) {
      throw ParseError(line_no, "malformed copy token " + tokens[0]);
    }
  }
  return StrictMatching(std::move(copies));
}

std::string write_strict_matching(const Instance& instance, const StrictMatching& assignment) {
  std::string out;
  for (EdgeCopy copy : assignment.copies()) out += to_string(instance, copy) + '\n';
  return out;
}

}  // namespace popmatch
