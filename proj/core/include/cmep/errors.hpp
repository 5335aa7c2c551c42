// Copyright 2026 The cmep Authors
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

#ifndef CMEP_ERRORS_HPP
#define CMEP_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cmep {

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

// Raised when an enumeration would exceed its configured element cap.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::uint64_t cap)
      : std::runtime_error(what), cap_(cap) {}
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

class DegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedStatistic : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotEhrhartError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotPalindromicError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Spec/kind or spec/mode combinations that an operation does not define.
class IncompatibleInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cmep

#endif  // CMEP_ERRORS_HPP
