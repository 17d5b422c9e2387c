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

#ifndef POPMATCH_ERRORS_HPP_
#define POPMATCH_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace popmatch {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance, matching or certificate text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

// Two selected edges share an agent, or an edge index is out of range.
class InvalidMatching : public Error {
 public:
  using Error::Error;
};

// The gamma vote rule or gamma-min stability on a weak-mode instance.
class RuleModeMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration refused because the edge count exceeds the limit.
class TooLarge : public Error {
 public:
  using Error::Error;
};

// A strict assignment uses some agent twice or names an unknown copy.
class InvalidAssignment : public Error {
 public:
  using Error::Error;
};

}  // namespace popmatch

#endif  // POPMATCH_ERRORS_HPP_
