// Copyright 2026 The resfin Authors
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

#ifndef RESFIN_ERROR_HPP_
#define RESFIN_ERROR_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace resfin {

// Base class for every error thrown by the library. `code()` is a short
// machine-readable identifier used by the CLI error records.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error("invalid_argument", what) {}
};

// Mismatched characteristic or arity between operands.
class RingMismatch : public Error {
 public:
  explicit RingMismatch(const std::string& what)
      : Error("ring_mismatch", what) {}
};

// Violated internal invariant; always an implementation bug.
class ArithmeticFault : public Error {
 public:
  explicit ArithmeticFault(const std::string& what)
      : Error("arithmetic_fault", what) {}
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t reached,
                 std::uint64_t budget)
      : Error("budget_exceeded", what), reached_(reached), budget_(budget) {}
  std::uint64_t reached() const noexcept { return reached_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t reached_;
  std::uint64_t budget_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error("parse_error",
              what + " at byte " + std::to_string(offset)),
        detail_(what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }
  // The message without the offset suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t offset_;
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label)
      : Error("unknown_label", "unknown generator label '" + label + "'") {}
};

// The word evaluates to the identity, so there is nothing to separate.
class IdentityWord : public Error {
 public:
  explicit IdentityWord(const std::string& word)
      : Error("identity_word", "word '" + word + "' is trivial in the group") {}
};

class NotFoundWithinBudget : public Error {
 public:
  explicit NotFoundWithinBudget(const std::string& what)
      : Error("not_found_within_budget", what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("io_error", what) {}
};

}  // namespace resfin

#endif  // RESFIN_ERROR_HPP_
