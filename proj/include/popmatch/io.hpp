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

#ifndef POPMATCH_IO_HPP_
#define POPMATCH_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "popmatch/instance.hpp"

namespace popmatch {

/// Line-oriented instance format:
///
///   mode weak|gamma
///   u <id> [<id> ...]
///   w <id> [<id> ...]
///   edge <eid> <u-id> <w-id> <p_u> <p_w> [<gamma_u> <gamma_w>]
///
/// '#' starts a comment, blank lines are ignored, the mode line comes first
/// and agents are declared before the edges that use them. Numbers are
/// decimals or fractions a/b. Throws ParseError carrying the line number.
Instance parse_instance(std::string_view text);
std::string write_instance(const Instance& instance);

/// One edge id per line. `size <k>` lines are ignored, as are certificate
/// tokens such as `b(f1)` that do not name an edge.
Matching parse_matching(const Instance& instance, std::string_view text);
/// Edge ids in listing order followed by `size <k>`.
std::string write_matching(const Instance& instance, const Matching& matching);

/// Splits on whitespace after dropping any '#' comment.
std::vector<std::string> tokenize_line(std::string_view line);

std::string read_file(const std::string& path);

}  // namespace popmatch

#endif  // POPMATCH_IO_HPP_
