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

#ifndef CMEP_Q_BINOMIAL_HPP
#define CMEP_Q_BINOMIAL_HPP

#include <string>

#include "cmep/polynomial.hpp"

namespace cmep {

/**
 * Gaussian binomial [a choose b]_q via the Pascal recursion
 * [a, b] = [a-1, b-1] + q^b [a-1, b].
 *
 * Out-of-range conventions: b = 0 gives 1 for every a, b < 0 gives 0, and
 * 0 < b with a < b gives 0.
 */
IntPoly q_binomial(long a, long b, std::string var = "q");

// Same polynomial as a sum of q^{g_1+...+g_b} over 0 <= g_1 <= ... <= g_b <= a-b.
IntPoly q_binomial_by_sequences(long a, long b, std::string var = "q");

}  // namespace cmep

#endif  // CMEP_Q_BINOMIAL_HPP
