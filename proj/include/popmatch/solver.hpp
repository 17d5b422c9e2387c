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

#ifndef POPMATCH_SOLVER_HPP_
#define POPMATCH_SOLVER_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "popmatch/duplication.hpp"
#include "popmatch/instance.hpp"

namespace popmatch {

/// A matching of the duplicated instance: which copy of which edge is used.
class StrictMatching {
 public:
  StrictMatching() = default;
  explicit StrictMatching(std::vector<EdgeCopy> copies);

  std::span<const EdgeCopy> copies() const { return copies_; }
  std::size_t size() const { return copies_.size(); }
  bool contains(EdgeCopy copy) const;

  friend bool operator==(const StrictMatching&, const StrictMatching&) = default;

 private:
  std::vector<EdgeCopy> copies_;
};

/// U-proposing deferred acceptance. Free proposers are served FIFO, starting
/// in U listing order; a displaced agent rejoins at the tail.
StrictMatching gale_shapley(const DuplicatedInstance& dup);

/// Copies outside S that both endpoints strictly prefer to their S copy (or
/// to being unmatched), ordered by edge then copy type. Throws
/// InvalidAssignment when S uses an agent twice or holds a copy missing from
/// an endpoint's list.
std::vector<EdgeCopy> check_strict_stability(const DuplicatedInstance& dup,
                                             const StrictMatching& assignment);

/// Keeps every edge that has a copy in the assignment.
Matching project(const StrictMatching& assignment);

struct Solution {
  StrictMatching certificate;
  Matching matching;
};

/// Duplicate, run deferred acceptance, project back.
Solution solve_with_certificate(const Instance& instance);
Matching solve(const Instance& instance);

/// `copy(edge)` tokens, one per line; blank lines, comments and lines that
/// name plain edges or `size` are ignored.
StrictMatching parse_strict_matching(const Instance& instance, std::string_view text);
std::string write_strict_matching(const Instance& instance, const StrictMatching& assignment);

}  // namespace popmatch

#endif  // POPMATCH_SOLVER_HPP_
