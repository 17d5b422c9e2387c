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

#include "popmatch/duplication.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace popmatch {
namespace {

struct Block {
  CopyType primary;
  std::optional<CopyType> inserted;
};

constexpr std::array<Block, 4> kUBlocks = {Block{CopyType::a, CopyType::b},
                                           Block{CopyType::c, std::nullopt},
                                           Block{CopyType::x, CopyType::y},
                                           Block{CopyType::z, std::nullopt}};
constexpr std::array<Block, 4> kWBlocks = {Block{CopyType::z, CopyType::y},
                                           Block{CopyType::x, std::nullopt},
                                           Block{CopyType::c, CopyType::b},
                                           Block{CopyType::a, std::nullopt}};

const std::array<Block, 4>& blocks(Side side) { return side == Side::u ? kUBlocks : kWBlocks; }

std::size_t block_of(Side side, CopyType copy) {
  const auto& bs = blocks(side);
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (bs[i].primary == copy || bs[i].inserted == copy) return i;
  }
  return bs.size();
}

bool is_inserted(Side side, CopyType copy) { return blocks(side)[block_of(side, copy)].inserted == copy; }

// The inserted copy of f goes ahead of the primary copy of e.
bool jumps_ahead(const Instance& instance, Side side, EdgeIndex f, EdgeIndex e) {
  const Edge& fe = instance.edge(f);
  const Rational& pe = instance.edge(e).value(side);
  if (instance.mode() == Mode::weak) return fe.value(side) > pe;
  return fe.value(side) >= pe + *fe.gamma(side);
}

std::vector<EdgeCopy> build_list(const Instance& instance, AgentRef agent) {
  std::vector<EdgeIndex> sorted(instance.incident(agent).begin(), instance.incident(agent).end());
  std::stable_sort(sorted.begin(), sorted.end(), [&](EdgeIndex l, EdgeIndex r) {
    return instance.edge(l).value(agent.side) > instance.edge(r).value(agent.side);
  });

  std::vector<EdgeCopy> out;
  out.reserve(sorted.size() * 6);
  for (const Block& block : blocks(agent.side)) {
    std::vector<bool> placed(sorted.size(), false);
    for (EdgeIndex e : sorted) {
      if (block.inserted) {
        for (std::size_t k = 0; k < sorted.size(); ++k) {
          if (!placed[k] && jumps_ahead(instance, agent.side, sorted[k], e)) {
            out.push_back({sorted[k], *block.inserted});
            placed[k] = true;
          }
        }
      }
      out.push_back({e, block.primary});
    }
    if (block.inserted) {
      for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (!placed[k]) out.push_back({sorted[k], *block.inserted});
      }
    }
  }
  return out;
}

}  // namespace

char to_char(CopyType copy) { return "abcxyz"[static_cast<std::size_t>(copy)]; }

std::optional<CopyType> parse_copy_type(char c) {
  switch (c) {
    case 'a': return CopyType::a;
    case 'b': return CopyType::b;
    case 'c': return CopyType::c;
    case 'x': return CopyType::x;
    case 'y': return CopyType::y;
    case 'z': return CopyType::z;
    default: return std::nullopt;
  }
}

std::string to_string(const Instance& instance, EdgeCopy copy) {
  return std::string(1, to_char(copy.copy)) + "(" + instance.edge(copy.edge).id + ")";
}

std::optional<EdgeCopy> parse_edge_copy(const Instance& instance, std::string_view token) {
  if (token.size() < 4 || token[1] != '(' || token.back() != ')') return std::nullopt;
  auto type = parse_copy_type(token[0]);
  auto edge = instance.find_edge(token.substr(2, token.size() - 3));
  if (!type || !edge) return std::nullopt;
  return EdgeCopy{*edge, *type};
}

DuplicatedInstance::DuplicatedInstance(Instance base,
                                       std::vector<std::vector<EdgeCopy>> u_preferences,
                                       std::vector<std::vector<EdgeCopy>> w_preferences)
    : base_(std::move(base)),
      u_preferences_(std::move(u_preferences)),
      w_preferences_(std::move(w_preferences)),
      u_rank_(base_.edge_count() * 6, kAbsent),
      w_rank_(base_.edge_count() * 6, kAbsent) {
  u_preferences_.resize(base_.agents(Side::u).size());
  w_preferences_.resize(base_.agents(Side::w).size());
  for (Side side : {Side::u, Side::w}) {
    auto& prefs = side == Side::u ? u_preferences_ : w_preferences_;
    auto& ranks = side == Side::u ? u_rank_ : w_rank_;
    for (std::size_t v = 0; v < prefs.size(); ++v) {
      for (std::size_t r = 0; r < prefs[v].size(); ++r) {
        EdgeCopy copy = prefs[v][r];
        if (copy.edge >= base_.edge_count()) continue;
        if (base_.edge(copy.edge).endpoint(side) != v) continue;
        if (ranks[slot(copy)] == kAbsent) ranks[slot(copy)] = r;
      }
    }
  }
}

std::optional<std::size_t> DuplicatedInstance::rank(AgentRef agent, EdgeCopy copy) const {
  if (copy.edge >= base_.edge_count()) return std::nullopt;
  if (base_.edge(copy.edge).endpoint(agent.side) != agent.index) return std::nullopt;
  std::size_t r = (agent.side == Side::u ? u_rank_ : w_rank_)[slot(copy)];
  if (r == kAbsent) return std::nullopt;
  return r;
}

bool DuplicatedInstance::prefers(AgentRef agent, EdgeCopy a, std::optional<EdgeCopy> b) const {
  auto ra = rank(agent, a);
  if (!ra) return false;
  if (!b) return true;
  auto rb = rank(agent, *b);
  return !rb || *ra < *rb;
}

DuplicatedInstance build_duplicated(const Instance& instance) {
  std::vector<std::vector<EdgeCopy>> u_prefs;
  std::vector<std::vector<EdgeCopy>> w_prefs;
  for (std::size_t i = 0; i < instance.agents(Side::u).size(); ++i) {
    u_prefs.push_back(build_list(instance, {Side::u, i}));
  }
  for (std::size_t i = 0; i < instance.agents(Side::w).size(); ++i) {
    w_prefs.push_back(build_list(instance, {Side::w, i}));
  }
  return DuplicatedInstance(instance, std::move(u_prefs), std::move(w_prefs));
}

std::vector<DuplicationViolation> validate_duplicated(const DuplicatedInstance& dup) {
  const Instance& instance = dup.base();
  std::vector<DuplicationViolation> out;
  for (AgentRef agent : instance.all_agents()) {
    auto report = [&](std::string message) { out.push_back({agent, std::move(message)}); };
    auto name = [&](EdgeCopy c) { return to_string(instance, c); };

    std::map<EdgeCopy, int> seen;
    std::vector<EdgeCopy> list;
    for (EdgeCopy copy : dup.preferences(agent)) {
      if (copy.edge >= instance.edge_count() ||
          instance.edge(copy.edge).endpoint(agent.side) != agent.index) {
        report("foreign copy in list");
        continue;
      }
      if (seen[copy]++ > 0) {
        report("duplicate copy " + name(copy));
        continue;
      }
      list.push_back(copy);
    }
    for (EdgeIndex e : instance.incident(agent)) {
      for (CopyType t : kCopyTypes) {
        if (!seen.contains({e, t})) report("missing copy " + name({e, t}));
      }
    }

    const Side side = agent.side;
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        const EdgeCopy hi = list[i];
        const EdgeCopy lo = list[j];
        const std::size_t bh = block_of(side, hi.copy);
        const std::size_t bl = block_of(side, lo.copy);
        if (bl < bh) {
          report(std::string(1, to_char(lo.copy)) + " must precede " + to_char(hi.copy) + ": " +
                 name(hi) + " is ranked above " + name(lo));
          continue;
        }
        if (bl != bh) continue;
        const bool hi_ins = is_inserted(side, hi.copy);
        const bool lo_ins = is_inserted(side, lo.copy);
        if (!hi_ins && !lo_ins) {
          if (instance.edge(hi.edge).value(side) < instance.edge(lo.edge).value(side)) {
            report(std::string(1, to_char(hi.copy)) + " copies out of value order: " + name(hi) +
                   " is ranked above " + name(lo));
          }
        } else if (!hi_ins && lo_ins) {
          if (jumps_ahead(instance, side, lo.edge, hi.edge)) {
            report(name(lo) + " must precede " + name(hi));
          }
        } else if (hi_ins && !lo_ins) {
          if (!jumps_ahead(instance, side, hi.edge, lo.edge)) {
            report(name(lo) + " must precede " + name(hi));
          }
        }
      }
    }
  }
  return out;
}

std::string dump_duplicated(const DuplicatedInstance& dup) {
  std::ostringstream out;
  for (AgentRef agent : dup.base().all_agents()) {
    out << dup.base().name(agent);
    for (EdgeCopy copy : dup.preferences(agent)) out << ' ' << to_string(dup.base(), copy);
    out << '\n';
  }
  return out.str();
}

}  // namespace popmatch
