// Copyright 2026 the charp authors
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

#ifndef CHARP_ERRORS_HPP
#define CHARP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace charp {

/// Thrown when a computation exceeds its configured resource budget
/// (basis size, degree, saturation ladder, search trials). Never used
/// for mathematically wrong input; budget exhaustion is loud, not a
/// silent truncation.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Structural misuse: mismatched rings, invalid presentations, missing
/// certificates, precondition violations.
class structure_error : public std::invalid_argument {
 public:
  explicit structure_error(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Parse failure with source location.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t line, std::size_t col)
      : std::runtime_error(what + " (line " + std::to_string(line) +
                           ", column " + std::to_string(col) + ")"),
        line_(line),
        col_(col) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

}  // namespace charp

#endif  // CHARP_ERRORS_HPP
