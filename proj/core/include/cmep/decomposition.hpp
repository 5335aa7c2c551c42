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

#ifndef CMEP_DECOMPOSITION_HPP
#define CMEP_DECOMPOSITION_HPP

#include <vector>

#include "cmep/polynomial.hpp"

namespace cmep {

/// p = a + x b with a symmetric about n and b symmetric about n - 1.
struct SymmetricDecomposition {
  IntPoly a;
  IntPoly b;
  int n = 0;
};

// Requires deg p <= n. a_k = sum_{i<=k} (p_i - p_{n+1-i}), b_k = sum_{i<=k} (p_{n-i} - p_i).
SymmetricDecomposition symmetric_decomposition(const IntPoly& p, int n);

/// p = sum_i gammas[i] x^i (1+x)^{n-2i}.
struct GammaVector {
  std::vector<Integer> gammas;
  int n = 0;

  bool nonnegative() const;
  IntPoly reconstruct() const;
  bool operator==(const GammaVector&) const = default;
};

// Throws NotPalindromicError unless p is symmetric about n.
GammaVector gamma_expansion(const IntPoly& p, int n);

struct ShapeReport {
  bool unimodal = false;
  bool log_concave = false;
  bool alternatingly_increasing = false;
  bool nonnegative = false;
};

// Alternating increase is read against reference degree n.
ShapeReport shape_checks(const IntPoly& p, int n);

}  // namespace cmep

#endif  // CMEP_DECOMPOSITION_HPP
