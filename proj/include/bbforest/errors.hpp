// Copyright 2026 The bbforest Authors
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

#ifndef BBFOREST_ERRORS_HPP_
#define BBFOREST_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bbforest {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad graph text or bad row data. `line()` is 1-based, 0 when the error is
// not tied to a line of input.
class MalformedInput : public Error {
 public:
  explicit MalformedInput(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// The instance is larger than a configured cap (part size, brute-force
// vertex limit).
class InstanceTooLarge : public Error {
 public:
  InstanceTooLarge(const std::string& what, std::uint64_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

// A generator or driver was called outside its parameter domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Enumeration refused because C(2n, f) exceeds the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t combinations, std::uint64_t budget)
      : Error("enumeration needs C(2n, f) = " + std::to_string(combinations) +
              " subset checks, budget is " + std::to_string(budget)),
        combinations_(combinations),
        budget_(budget) {}

  std::uint64_t combinations() const { return combinations_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t combinations_;
  std::uint64_t budget_;
};

}  // namespace bbforest

#endif  // BBFOREST_ERRORS_HPP_
