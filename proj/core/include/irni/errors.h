// Copyright 2026 The IRNI Authors
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

#ifndef IRNI_ERRORS_H_
#define IRNI_ERRORS_H_

#include <stdexcept>
#include <string>

namespace irni {

// Input violates a documented precondition (bad vertex, duplicate
// individualization, malformed file, ...).
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A parse failure in the graph text format. Carries the 1-based line number.
class ParseError : public InvalidInputError {
 public:
  ParseError(int line, const std::string& message)
      : InvalidInputError("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// The requested augmentation method is not supported by the operation.
class UnsupportedMethodError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

// An exhaustive enumeration would exceed its node budget.
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace irni

#endif  // IRNI_ERRORS_H_
