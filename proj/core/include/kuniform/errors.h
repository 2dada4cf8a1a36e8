// Copyright 2026 The kuniform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KUNIFORM_ERRORS_H_
#define KUNIFORM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace kuniform {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: wrong dimensions, nonpositive epsilon, invalid profile, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The instance is too large for exact evaluation under the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A formula or estimator does not apply to the given parameters
// (e.g. a concentration bound for a player with no dependencies).
class Inapplicable : public Error {
 public:
  using Error::Error;
};

// Game / profile / experiment file problems. Each kind carries its own
// diagnostic prefix so callers and users can tell them apart.
class ParseError : public Error {
 public:
  enum class Kind { kMalformed, kRange, kDimension, kUnsupported };

  ParseError(Kind kind, const std::string& what)
      : Error(std::string(Prefix(kind)) + what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  static const char* Prefix(Kind kind) {
    switch (kind) {
      case Kind::kMalformed:
        return "malformed document: ";
      case Kind::kRange:
        return "payoff out of range: ";
      case Kind::kDimension:
        return "dimension mismatch: ";
      case Kind::kUnsupported:
        return "unsupported: ";
    }
    return "";
  }

  Kind kind_;
};

}  // namespace kuniform

#endif  // KUNIFORM_ERRORS_H_
