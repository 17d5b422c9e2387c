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

#ifndef POPMATCH_STABILITY_HPP_
#define POPMATCH_STABILITY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "popmatch/instance.hpp"

namespace popmatch {

enum class StabilityNotion { weak_stable, gamma_min, super };

std::optional<StabilityNotion> parse_stability_notion(std::string_view text);
std::string to_string(StabilityNotion notion);

/// weak mode -> weak_stable, gamma mode -> gamma_min.
StabilityNotion notion_of(Mode mode);

/// Edges outside M that block it under the notion, in listing order.
///  weak_stable: both endpoints strictly improve.
///  gamma_min:   each endpoint v improves by at least gamma_e^v.
///  super:       both endpoints weakly improve.
/// Throws RuleModeMismatch for gamma_min on a weak-mode instance and
/// InvalidMatching when M is not a matching.
std::vector<EdgeIndex> blocking_edges(const Instance& instance, const Matching& m,
                                      StabilityNotion notion);

bool is_stable(const Instance& instance, const Matching& m, StabilityNotion notion);

/// No edge has both endpoints free.
bool is_maximal(const Instance& instance, const Matching& m);

/// Every index names an edge and no agent is used twice.
bool is_valid(const Instance& instance, const Matching& m);

}  // namespace popmatch

#endif  // POPMATCH_STABILITY_HPP_
