// Copyright 2026 The tempograph Authors
//
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

#ifndef TEMPOGRAPH_ERRORS_HPP_
#define TEMPOGRAPH_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tempograph {

// Caller supplied something that violates an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A tgraph document could not be loaded. Carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Request is well formed but exceeds a desk-scale guard (exhaustive work).
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tempograph

#endif  // TEMPOGRAPH_ERRORS_HPP_
