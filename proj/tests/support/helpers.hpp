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

#ifndef CMEP_TESTS_HELPERS_HPP
#define CMEP_TESTS_HELPERS_HPP

#include <vector>

#include "cmep/polynomial.hpp"

namespace testing_support {

inline std::vector<long long> coeffs(const cmep::IntPoly& p) {
  std::vector<long long> out;
  for (const auto& c : p.coefficients()) out.push_back(c.get_si());
  return out;
}

inline cmep::IntPoly poly(const std::vector<long long>& c) {
  std::vector<cmep::Integer> v;
  for (long long x : c) v.emplace_back(static_cast<long>(x));
  return cmep::IntPoly(std::move(v));
}

}  // namespace testing_support

#endif  // CMEP_TESTS_HELPERS_HPP
