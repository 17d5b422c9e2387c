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

#ifndef POPMATCH_RATIONAL_HPP_
#define POPMATCH_RATIONAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace popmatch {

/// Exact value type used for valuations and improvement thresholds.
using Rational = boost::rational<std::int64_t>;

/// Parses "7", "-3", "1.25", ".5" or "3/4". Returns nullopt on malformed
/// input, a zero denominator, or a value that does not fit in 64 bits.
std::optional<Rational> parse_rational(std::string_view text);

/// "3", "-1/2": integers print without a denominator.
std::string to_string(const Rational& value);

}  // namespace popmatch

#endif  // POPMATCH_RATIONAL_HPP_
