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

#ifndef CMEP_SELF_INTERLACING_HPP
#define CMEP_SELF_INTERLACING_HPP

#include <array>
#include <string>

#include "cmep/decomposition.hpp"
#include "cmep/polynomial.hpp"

namespace cmep {

struct ConditionResult {
  std::string name;
  bool weak = false;
  bool strict = false;
};

/**
 * The five equivalent self-interlacing conditions for a polynomial p of
 * degree at most d with nonnegative symmetric decomposition (a, b):
 *   1. b interlaces a
 *   2. b interlaces p
 *   3. a interlaces p
 *   4. I_d(p) interlaces p
 *   5. R_d(E) interlaces E, with E = (1+x)^d p(x/(1+x))
 * Condition 5 read literally on p itself, R_d(p) interlacing p, is kept
 * alongside as reflection_on_p; it is not one of the five.
 */
struct SelfInterlacingReport {
  int d = 0;
  SymmetricDecomposition decomposition;
  bool hypothesis_met = false;  // a and b have nonnegative coefficients
  std::array<ConditionResult, 5> conditions;
  ConditionResult reflection_on_p;
  bool weak_agree = false;
  bool strict_agree = false;
};

SelfInterlacingReport self_interlacing_suite(const IntPoly& p, int d);

}  // namespace cmep

#endif  // CMEP_SELF_INTERLACING_HPP
