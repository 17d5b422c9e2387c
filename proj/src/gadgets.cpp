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

#include "popmatch/gadgets.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "popmatch/io.hpp"

namespace popmatch {
namespace {

// Weak orders given as tie groups, best first, realized by the rank
// encoding: group g of k non-empty groups gets value k - g.
class OrdinalLists {
 public:
  void rank(const std::string& agent, std::vector<std::vector<std::string>> groups) {
    std::erase_if(groups, [](const auto& g) { return g.empty(); });
    const auto k = static_cast<std::int64_t>(groups.size());
    for (std::int64_t g = 0; g < k; ++g) {
      for (const auto& edge : groups[g]) values_[{agent, edge}] = Rational(k - g);
    }
  }

  Rational value(const std::string& agent, const std::string& edge) const {
    auto it = values_.find({agent, edge});
    if (it == values_.end()) throw std::logic_error("no rank for " + agent + "/" + edge);
    return it->second;
  }

 private:
  std::map<std::pair<std::string, std::string>, Rational> values_;
};

struct PlainEdge {
  std::string id;
  std::string u;
  std::string w;
};

Instance assemble_weak(const std::vector<std::string>& u_agents,
                       const std::vector<std::string>& w_agents,
                       const std::vector<PlainEdge>& edges, const OrdinalLists& lists) {
  InstanceBuilder builder(Mode::weak);
  for (const auto& u : u_agents) builder.add_agent(Side::u, u);
  for (const auto& w : w_agents) builder.add_agent(Side::w, w);
  for (const auto& e : edges) {
    builder.add_edge(e.id, e.u, e.w, lists.value(e.u, e.id), lists.value(e.w, e.id));
  }
  return builder.build();
}

// Rebuilds an instance through the builder so that new agents and edges can
// be appended; throws PreconditionViolated if a generated name collides.
class Extender {
 public:
  explicit Extender(const Instance& base) : base_(base), builder_(base.mode()) {}

  void add_agent(Side side, const std::string& id) {
    if (base_.find_agent(id)) throw PreconditionViolated("generated agent id " + id + " is taken");
    pending_agents_.push_back({side, id});
  }

  void add_edge(Edge edge, const std::string& u, const std::string& w) {
    if (base_.find_edge(edge.id)) {
      throw PreconditionViolated("generated edge id " + edge.id + " is taken");
    }
    pending_edges_.push_back({std::move(edge), u, w});
  }

  template <typename Adjust>
  Instance build(Adjust&& adjust) {
    for (Side side : {Side::u, Side::w}) {
      for (const auto& name : base_.agents(side)) builder_.add_agent(side, name);
      for (const auto& [s, id] : pending_agents_) {
        if (s == side) builder_.add_agent(side, id);
      }
    }
    for (const Edge& original : base_.edges()) {
      Edge e = original;
      adjust(e);
      builder_.add_edge(e.id, base_.agents(Side::u)[e.u], base_.agents(Side::w)[e.w], e.p_u,
                        e.p_w, e.gamma_u, e.gamma_w);
    }
    for (const auto& p : pending_edges_) {
      builder_.add_edge(p.edge.id, p.u, p.w, p.edge.p_u, p.edge.p_w, p.edge.gamma_u,
                        p.edge.gamma_w);
    }
    return builder_.build();
  }

 private:
  struct PendingEdge {
    Edge edge;
    std::string u;
    std::string w;
  };
  const Instance& base_;
  InstanceBuilder builder_;
  std::vector<std::pair<Side, std::string>> pending_agents_;
  std::vector<PendingEdge> pending_edges_;
};

Edge weak_edge(std::string id, Rational p_u, Rational p_w) {
  Edge e;
  e.id = std::move(id);
  e.p_u = p_u;
  e.p_w = p_w;
  return e;
}

bool has_tie(const Instance& instance, AgentRef agent) {
  auto inc = instance.incident(agent);
  std::set<Rational> seen;
  for (EdgeIndex e : inc) {
    if (!seen.insert(instance.edge(e).value(agent.side)).second) return true;
  }
  return false;
}

// Mixes a 64-bit draw into [0, 1) with 53 bits, independent of the library's
// distribution implementations.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
std::size_t below(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

}  // namespace

ForbiddenEnds check_pm_restricted(const PmRestrictedInstance& p) {
  const Instance& base = p.base;
  if (base.mode() != Mode::weak) throw PreconditionViolated("base instance must be weak mode");
  if (p.forbidden_edge >= base.edge_count()) throw PreconditionViolated("unknown forbidden edge");
  for (AgentRef agent : base.all_agents()) {
    if (has_tie(base, agent)) {
      throw PreconditionViolated("base preferences must be strict; " + base.name(agent) +
                                 " has a tie");
    }
  }
  const Edge& xy = base.edge(p.forbidden_edge);
  AgentRef x{Side::u, xy.u};
  AgentRef y{Side::w, xy.w};
  if (base.incident(x).size() != 1) std::swap(x, y);
  if (base.incident(x).size() != 1) throw PreconditionViolated("no endpoint of the forbidden edge is a leaf");
  auto y_edges = base.incident(y);
  if (y_edges.size() != 2) throw PreconditionViolated("y must have exactly two incident edges");
  const EdgeIndex yz = y_edges[0] == p.forbidden_edge ? y_edges[1] : y_edges[0];
  AgentRef z{x.side, base.edge(yz).endpoint(x.side)};
  if (z == x) throw PreconditionViolated("y's other edge leads back to x");
  if (base.edge(yz).value(y.side) <= xy.value(y.side)) {
    throw PreconditionViolated("y must rank z first");
  }
  for (EdgeIndex e : base.incident(z)) {
    if (e != yz && base.edge(e).value(z.side) >= base.edge(yz).value(z.side)) {
      throw PreconditionViolated("z must rank y first");
    }
  }
  if (p.forced_vertex.index >= base.agents(p.forced_vertex.side).size()) {
    throw PreconditionViolated("unknown forced agent");
  }
  if (p.forced_vertex == x || p.forced_vertex == y) {
    throw PreconditionViolated("forced agent must differ from x and y");
  }
  return {x, y, z};
}

PmRestrictedInstance parse_pm_restricted(std::string_view text) {
  std::string rest;
  std::optional<std::pair<std::size_t, std::string>> forbidden;
  std::optional<std::pair<std::size_t, std::string>> forced;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    auto tok = tokenize_line(line);
    if (!tok.empty() && (tok[0] == "forbidden" || tok[0] == "forced")) {
      if (tok.size() != 2) throw ParseError(line_no, tok[0] + " takes one id");
      auto& slot = tok[0] == "forbidden" ? forbidden : forced;
      if (slot) throw ParseError(line_no, "repeated " + tok[0] + " line");
      slot.emplace(line_no, tok[1]);
      rest += '\n';
      continue;
    }
    rest.append(line);
    rest += '\n';
  }
  PmRestrictedInstance p{parse_instance(rest)};
  if (!forbidden) throw ParseError(line_no, "missing 'forbidden <edge-id>' line");
  if (!forced) throw ParseError(line_no, "missing 'forced <agent-id>' line");
  auto e = p.base.find_edge(forbidden->second);
  if (!e) throw ParseError(forbidden->first, "unknown edge " + forbidden->second);
  auto t = p.base.find_agent(forced->second);
  if (!t) throw ParseError(forced->first, "unknown agent " + forced->second);
  p.forbidden_edge = *e;
  p.forced_vertex = *t;
  return p;
}

std::string write_pm_restricted(const PmRestrictedInstance& p) {
  return write_instance(p.base) + "forbidden " + p.base.edge(p.forbidden_edge).id + '\n' +
         "forced " + p.base.name(p.forced_vertex) + '\n';
}

Instance gadget_smti(const Instance& smti) {
  if (smti.mode() != Mode::weak) throw PreconditionViolated("SMTI input must be weak mode");
  const std::size_t n = smti.agents(Side::u).size();
  if (smti.agents(Side::w).size() != n) throw PreconditionViolated("sides must have equal size");
  for (std::size_t i = 0; i < n; ++i) {
    if (has_tie(smti, {Side::u, i})) {
      throw PreconditionViolated("ties must be on the W side only; " + smti.agents(Side::u)[i] +
                                 " has a tie");
    }
  }

  Extender ext(smti);
  for (std::size_t i = 1; i <= n; ++i) ext.add_agent(Side::w, "z" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) ext.add_agent(Side::u, "z" + std::to_string(i) + "'");
  for (std::size_t i = 0; i < n; ++i) {
    Rational top(1);
    for (EdgeIndex e : smti.incident({Side::u, i})) top = std::max(top, smti.edge(e).p_u + 1);
    const std::string k = std::to_string(i + 1);
    ext.add_edge(weak_edge("uz" + k, top, Rational(2)), smti.agents(Side::u)[i], "z" + k);
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const std::string k = std::to_string(i);
    ext.add_edge(weak_edge("zz" + k, Rational(1), Rational(1)), "z" + k + "'", "z" + k);
  }
  return ext.build([](Edge&) {});
}

Instance gadget_inapprox(const Instance& graph) {
  const std::size_t n = graph.agents(Side::u).size();
  if (graph.agents(Side::w).size() != n) throw PreconditionViolated("sides must have equal size");
  if (n % 2 != 0) throw PreconditionViolated("n must be even");
  const std::size_t half = n / 2;
  const auto& us = graph.agents(Side::u);
  const auto& ws = graph.agents(Side::w);
  auto idx = [](std::size_t j) { return std::to_string(j + 1); };

  std::vector<std::string> u_agents(us.begin(), us.end());
  std::vector<std::string> w_agents(ws.begin(), ws.end());
  std::vector<std::string> w_prime, u_prime, zs, z_prime;
  for (const auto& w : ws) w_prime.push_back(w + "'");
  for (std::size_t j = 0; j < half; ++j) {
    u_prime.push_back("u'" + idx(j));
    zs.push_back("z" + idx(j));
    z_prime.push_back("z'" + idx(j));
  }
  u_agents.insert(u_agents.end(), w_prime.begin(), w_prime.end());
  u_agents.insert(u_agents.end(), zs.begin(), zs.end());
  w_agents.insert(w_agents.end(), u_prime.begin(), u_prime.end());
  w_agents.insert(w_agents.end(), z_prime.begin(), z_prime.end());
  std::set<std::string> seen;
  for (const auto& name : u_agents) {
    if (!seen.insert(name).second) throw PreconditionViolated("generated agent id " + name + " is taken");
  }
  for (const auto& name : w_agents) {
    if (!seen.insert(name).second) throw PreconditionViolated("generated agent id " + name + " is taken");
  }

  std::vector<PlainEdge> edges;
  for (const Edge& e : graph.edges()) edges.push_back({e.id, us[e.u], ws[e.w]});
  for (std::size_t i = 0; i < n; ++i) edges.push_back({"ww" + idx(i), w_prime[i], ws[i]});
  for (std::size_t j = 0; j < half; ++j) edges.push_back({"uz" + idx(j), zs[j], u_prime[j]});
  for (std::size_t j = 0; j < half; ++j) edges.push_back({"zz" + idx(j), zs[j], z_prime[j]});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < half; ++j) {
      edges.push_back({"uu" + idx(i) + "_" + idx(j), us[i], u_prime[j]});
    }
  }
  std::set<std::string> edge_ids;
  for (const auto& e : edges) {
    if (!edge_ids.insert(e.id).second) throw PreconditionViolated("generated edge id " + e.id + " is taken");
  }

  OrdinalLists lists;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> g_u, g_w;
    for (EdgeIndex e : graph.incident({Side::u, i})) g_u.push_back(graph.edge(e).id);
    for (EdgeIndex e : graph.incident({Side::w, i})) g_w.push_back(graph.edge(e).id);
    std::vector<std::string> to_u_prime;
    for (std::size_t j = 0; j < half; ++j) to_u_prime.push_back("uu" + idx(i) + "_" + idx(j));
    lists.rank(us[i], {g_u, to_u_prime});
    lists.rank(ws[i], {g_w, {"ww" + idx(i)}});
    lists.rank(w_prime[i], {{"ww" + idx(i)}});
  }
  for (std::size_t j = 0; j < half; ++j) {
    std::vector<std::string> to_u;
    for (std::size_t i = 0; i < n; ++i) to_u.push_back("uu" + idx(i) + "_" + idx(j));
    lists.rank(u_prime[j], {{"uz" + idx(j)}, to_u});
    lists.rank(zs[j], {{"uz" + idx(j)}, {"zz" + idx(j)}});
    lists.rank(z_prime[j], {{"zz" + idx(j)}});
  }
  return assemble_weak(u_agents, w_agents, edges, lists);
}

Instance gadget_superpm(const PmRestrictedInstance& p) {
  const ForbiddenEnds ends = check_pm_restricted(p);
  const Instance& base = p.base;
  const AgentRef x = ends.x;
  const AgentRef t = p.forced_vertex;
  const std::string& x_name = base.name(x);
  const std::string& t_name = base.name(t);
  const std::string dx = "d_" + x_name;
  const std::string xp = x_name + "'";
  const std::string dt = "d_" + t_name;
  const std::string tp = t_name + "'";

  Extender ext(base);
  ext.add_agent(other(x.side), dx);
  ext.add_agent(x.side, xp);
  ext.add_agent(other(t.side), dt);
  ext.add_agent(t.side, tp);

  // x values d_x exactly like y; t ranks its old list k+1..2 and d_t at 1.
  const Rational x_value = base.edge(p.forbidden_edge).value(x.side);
  std::map<EdgeIndex, Rational> t_values;
  {
    std::vector<EdgeIndex> inc(base.incident(t).begin(), base.incident(t).end());
    std::sort(inc.begin(), inc.end(), [&](EdgeIndex a, EdgeIndex b) {
      return base.edge(a).value(t.side) > base.edge(b).value(t.side);
    });
    for (std::size_t r = 0; r < inc.size(); ++r) {
      t_values[inc[r]] = Rational(static_cast<std::int64_t>(inc.size() - r + 1));
    }
  }

  auto oriented = [](Side side_of_first, const std::string& first, const std::string& second,
                     Rational v_first, Rational v_second, std::string id, Extender& e) {
    if (side_of_first == Side::u) {
      e.add_edge(weak_edge(std::move(id), v_first, v_second), first, second);
    } else {
      e.add_edge(weak_edge(std::move(id), v_second, v_first), second, first);
    }
  };
  oriented(x.side, x_name, dx, x_value, Rational(2), "dx1", ext);
  oriented(x.side, xp, dx, Rational(1), Rational(1), "dx2", ext);
  oriented(t.side, t_name, dt, Rational(1), Rational(1), "dt1", ext);
  oriented(t.side, tp, dt, Rational(1), Rational(1), "dt2", ext);

  return ext.build([&](Edge& e) {
    if (auto it = t_values.find(*base.find_edge(e.id)); it != t_values.end()) {
      (t.side == Side::u ? e.p_u : e.p_w) = it->second;
    }
  });
}

std::optional<Matching> restricted_popular_exists(const PmRestrictedInstance& p,
                                                  std::size_t edge_limit) {
  check_pm_restricted(p);
  const Instance& base = p.base;
  return find_popular(
      base, VoteRule::classic,
      [&](const Matching& m) {
        if (m.contains(p.forbidden_edge)) return false;
        for (EdgeIndex e : base.incident(p.forced_vertex)) {
          if (m.contains(e)) return true;
        }
        return false;
      },
      edge_limit);
}

std::vector<TieAudit> audit_ties(const Instance& instance) {
  std::vector<TieAudit> out;
  for (AgentRef agent : instance.all_agents()) {
    std::map<Rational, std::size_t> groups;
    for (EdgeIndex e : instance.incident(agent)) ++groups[instance.edge(e).value(agent.side)];
    TieAudit audit{agent, {}};
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
      if (it->second > 1) audit.tie_lengths.push_back(it->second);
    }
    if (!audit.tie_lengths.empty()) out.push_back(std::move(audit));
  }
  return out;
}

std::optional<Fixture> parse_fixture(std::string_view name) {
  if (name == "example1") return Fixture::example1;
  if (name == "example2") return Fixture::example2;
  if (name == "example3") return Fixture::example3;
  return std::nullopt;
}

Instance fixture(Fixture which) {
  const std::size_t n = which == Fixture::example1 ? 3 : which == Fixture::example2 ? 4 : 5;
  auto s = [](std::size_t i) { return std::to_string(i); };
  std::vector<std::string> us, ws;
  std::vector<PlainEdge> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    us.push_back("u" + s(i));
    ws.push_back("w" + s(i));
  }
  for (std::size_t i = 1; i < n; ++i) edges.push_back({"f" + s(i), "u" + s(i), "w" + s(i + 1)});
  for (std::size_t i = 1; i <= n; ++i) edges.push_back({"e" + s(i), "u" + s(i), "w" + s(i)});

  OrdinalLists lists;
  lists.rank("w1", {{"e1"}});
  lists.rank("u" + s(n), {{"e" + s(n)}});
  for (std::size_t i = 1; i < n; ++i) {
    const std::string f = "f" + s(i);
    const std::string e = "e" + s(i);
    const std::string e_next = "e" + s(i + 1);
    // u_i ranks f_i first, except u_4 in example 3.
    if (which == Fixture::example3 && i == 4) {
      lists.rank("u" + s(i), {{e}, {f}});
    } else {
      lists.rank("u" + s(i), {{f}, {e}});
    }
    // w_{i+1}: strict toward f_i at the path's far end and in example 1,
    // a tie elsewhere.
    if (which == Fixture::example1 || i == n - 1) {
      lists.rank("w" + s(i + 1), {{f}, {e_next}});
    } else {
      lists.rank("w" + s(i + 1), {{f, e_next}});
    }
  }
  return assemble_weak(us, ws, edges, lists);
}

std::string fixture_text(Fixture which) {
  std::string header;
  switch (which) {
    case Fixture::example1:
      header =
          "# Path w1 u1 w2 u2 w3 u3 with strict preferences. Every degree-2 agent\n"
          "# prefers its f edge, so F = {f1, f2} is the only popular matching\n"
          "# while E = {e1, e2, e3} is perfect: ratio 2/3.\n";
      break;
    case Fixture::example2:
      header =
          "# Path on 8 agents, ties at w2 and w3. E = {e1..e4} is weakly popular;\n"
          "# F = {f1, f2, f3} is reachable by the algorithm: ratio 3/4.\n"
          "# F edges are listed first so ties at w2, w3 break toward f.\n";
      break;
    case Fixture::example3:
      header =
          "# Path on 10 agents, ties at w2, w3, w4. E = {e1..e5} is weakly stable;\n"
          "# F = {f1..f4} is reachable by the algorithm: ratio 4/5.\n"
          "# F edges are listed first so ties break toward f.\n";
      break;
  }
  return header + write_instance(fixture(which));
}

Instance random_instance(const RandomInstanceParams& params) {
  if (params.value_levels.empty()) throw PreconditionViolated("value_levels must not be empty");
  std::mt19937_64 rng(params.seed);
  const Mode mode = params.gamma_levels.empty() ? Mode::weak : Mode::gamma;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < params.u_count; ++u) {
    for (std::size_t w = 0; w < params.w_count; ++w) {
      if (unit(rng) < params.edge_prob) {
        pairs.emplace_back(u, w);
        if (params.parallel_prob > 0 && unit(rng) < params.parallel_prob) pairs.emplace_back(u, w);
      }
    }
  }
  while (params.max_edges != 0 && pairs.size() > params.max_edges) {
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(below(rng, pairs.size())));
  }

  auto pick = [&](const std::vector<Rational>& levels) { return levels[below(rng, levels.size())]; };
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    Edge e;
    e.id = "e" + std::to_string(k + 1);
    e.u = pairs[k].first;
    e.w = pairs[k].second;
    e.p_u = pick(params.value_levels);
    e.p_w = pick(params.value_levels);
    if (mode == Mode::gamma) {
      e.gamma_u = pick(params.gamma_levels);
      e.gamma_w = pick(params.gamma_levels);
    }
    edges.push_back(std::move(e));
  }
  if (params.one_sided_ties) {
    std::vector<std::vector<std::size_t>> by_u(params.u_count);
    for (std::size_t k = 0; k < edges.size(); ++k) by_u[edges[k].u].push_back(k);
    for (auto& list : by_u) {
      // Fisher-Yates with the portable draw.
      std::vector<std::int64_t> ranks(list.size());
      for (std::size_t r = 0; r < ranks.size(); ++r) ranks[r] = static_cast<std::int64_t>(r + 1);
      for (std::size_t r = ranks.size(); r > 1; --r) std::swap(ranks[r - 1], ranks[below(rng, r)]);
      for (std::size_t r = 0; r < list.size(); ++r) edges[list[r]].p_u = Rational(ranks[r]);
    }
  }

  std::vector<std::string> us, ws;
  for (std::size_t i = 1; i <= params.u_count; ++i) us.push_back("u" + std::to_string(i));
  for (std::size_t i = 1; i <= params.w_count; ++i) ws.push_back("w" + std::to_string(i));
  return Instance(mode, std::move(us), std::move(ws), std::move(edges));
}

}  // namespace popmatch
