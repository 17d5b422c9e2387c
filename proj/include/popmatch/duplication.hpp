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

#ifndef POPMATCH_DUPLICATION_HPP_
#define POPMATCH_DUPLICATION_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "popmatch/instance.hpp"

namespace popmatch {

/// The six parallel copies made of every edge.
enum class CopyType : std::uint8_t { a, b, c, x, y, z };

inline constexpr std::array<CopyType, 6> kCopyTypes = {CopyType::a, CopyType::b, CopyType::c,
                                                      CopyType::x, CopyType::y, CopyType::z};

char to_char(CopyType copy);
std::optional<CopyType> parse_copy_type(char c);

struct EdgeCopy {
  EdgeIndex edge = 0;
  CopyType copy = CopyType::a;

  friend auto operator<=>(const EdgeCopy&, const EdgeCopy&) = default;
};

/// "b(f1)".
std::string to_string(const Instance& instance, EdgeCopy copy);
std::optional<EdgeCopy> parse_edge_copy(const Instance& instance, std::string_view token);

/// Strict preferences over edge copies for every agent of a base instance.
/// Lists may be hand-supplied; validate_duplicated reports what is wrong
/// with them.
class DuplicatedInstance {
 public:
  DuplicatedInstance(Instance base, std::vector<std::vector<EdgeCopy>> u_preferences,
                     std::vector<std::vector<EdgeCopy>> w_preferences);

  const Instance& base() const { return base_; }

  /// Best first.
  std::span<const EdgeCopy> preferences(AgentRef agent) const {
    return agent.side == Side::u ? u_preferences_.at(agent.index) : w_preferences_.at(agent.index);
  }

  /// Position in the agent's list (0 = best), nullopt when absent.
  std::optional<std::size_t> rank(AgentRef agent, EdgeCopy copy) const;

  /// agent strictly prefers `a` to `b`; an absent `b` means unmatched.
  bool prefers(AgentRef agent, EdgeCopy a, std::optional<EdgeCopy> b) const;

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::size_t slot(EdgeCopy copy) const { return copy.edge * 6 + static_cast<std::size_t>(copy.copy); }

  Instance base_;
  std::vector<std::vector<EdgeCopy>> u_preferences_;
  std::vector<std::vector<EdgeCopy>> w_preferences_;
  // Indexed by edge * 6 + copy; each copy has one endpoint per side.
  std::vector<std::size_t> u_rank_;
  std::vector<std::size_t> w_rank_;
};

/// U agents rank a ⪰ b ≻ c ≻ x ⪰ y ≻ z, W agents z ⪰ y ≻ x ≻ c ⪰ b ≻ a.
/// Inside a ⪰ pair the primary copies (a, x for U) are sorted by value
/// descending, and b(f) / y(f) is placed ahead of a(e) / x(e) exactly when
/// p(f) >= p(e) + gamma_f (weak mode: p(f) > p(e)). Inserted copies sharing
/// a slot are ordered by value descending. Every remaining tie goes to the
/// earlier-listed edge.
DuplicatedInstance build_duplicated(const Instance& instance);

struct DuplicationViolation {
  AgentRef agent;
  std::string message;
};

/// Pairwise audit of one agent list per agent: coverage of every incident
/// copy exactly once, block order, value order inside a, c, x, z, and the
/// threshold rule for b and y. Empty result means valid.
std::vector<DuplicationViolation> validate_duplicated(const DuplicatedInstance& dup);

/// One line per agent (U first): `<agent> <copy(edge)> ...`.
std::string dump_duplicated(const DuplicatedInstance& dup);

}  // namespace popmatch

#endif  // POPMATCH_DUPLICATION_HPP_
