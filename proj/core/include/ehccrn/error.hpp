// Copyright 2026 The ehccrn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EHCCRN_ERROR_HPP
#define EHCCRN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ehccrn {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Raised when an alternating sum loses too many significant digits.
class StabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Configuration problem. `line()` is 0 when the error is not tied to a line.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::string const& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace ehccrn

#endif  // EHCCRN_ERROR_HPP
