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

#include "cmep/q_binomial.hpp"

#include <utility>
#include <vector>

namespace cmep {

namespace {

bool trivially_one(long, long b) { return b == 0; }
bool trivially_zero(long a, long b) { return b < 0 || (b > 0 && a < b); }

}  // namespace

IntPoly q_binomial(long a, long b, std::string var) {
  if (trivially_one(a, b)) return IntPoly::constant(Integer(1), std::move(var));
  if (trivially_zero(a, b)) return IntPoly({}, std::move(var));
  // row[j] = [i, j]_q for the current i.
  std::vector<IntPoly> row(static_cast<std::size_t>(b) + 1, IntPoly({}, var));
  row[0] = IntPoly::constant(Integer(1), var);
  for (long i = 1; i <= a; ++i) {
    long top = i < b ? i : b;
    for (long j = top; j >= 1; --j) {
      IntPoly shifted = row[j] * IntPoly::monomial(Integer(1), j, var);
      row[j] = row[j - 1] + shifted;
    }
  }
  return row[b];
}

IntPoly q_binomial_by_sequences(long a, long b, std::string var) {
  if (trivially_one(a, b)) return IntPoly::constant(Integer(1), std::move(var));
  if (trivially_zero(a, b)) return IntPoly({}, std::move(var));
  const long hi = a - b;
  std::vector<Integer> coeffs(static_cast<std::size_t>(hi * b) + 1);
  std::vector<long> g(static_cast<std::size_t>(b), 0);
  while (true) {
    long sum = 0;
    for (long v : g) sum += v;
    coeffs[sum] += 1;
    // Next weakly increasing sequence in lexicographic order.
    long i = b - 1;
    while (i >= 0 && g[i] == hi) --i;
    if (i < 0) break;
    long v = g[i] + 1;
    for (long j = i; j < b; ++j) g[j] = v;
  }
  return IntPoly(std::move(coeffs), std::move(var));
}

}  // namespace cmep
