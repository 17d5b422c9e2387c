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

#include "popmatch/rational.hpp"

#include <charconv>
#include <limits>

namespace popmatch {
namespace {

std::optional<std::int64_t> parse_digits(std::string_view digits) {
  if (digits.empty()) return std::nullopt;
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = !num.empty() && (num.front() == '-' || num.front() == '+');
    std::string_view num_digits = negative ? num.substr(1) : num;
    if (!all_digits(num_digits) || !all_digits(den)) return std::nullopt;
    auto n = parse_digits(num_digits);
    auto d = parse_digits(den);
    if (!n || !d || *d == 0) return std::nullopt;
    return Rational(num.front() == '-' ? -*n : *n, *d);
  }

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string_view whole = text;
  std::string_view frac;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    whole = text.substr(0, dot);
    frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
  } else if (whole.empty()) {
    return std::nullopt;
  }
  if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
  // 18 fractional digits keep 10^k inside int64.
  if (frac.size() > 18) return std::nullopt;

  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  std::int64_t w = whole.empty() ? 0 : parse_digits(whole).value_or(-1);
  if (w < 0) return std::nullopt;
  std::int64_t f = frac.empty() ? 0 : parse_digits(frac).value_or(-1);
  if (f < 0) return std::nullopt;
  if (w > (std::numeric_limits<std::int64_t>::max() - f) / scale) return std::nullopt;

  Rational value(w * scale + f, scale);
  return negative ? -value : value;
}

std::string to_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

}  // namespace popmatch
