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

#ifndef CMEP_EULERIAN_HPP
#define CMEP_EULERIAN_HPP

#include <cstdint>
#include <string>

#include "cmep/combinatorics.hpp"
#include "cmep/polynomial.hpp"

namespace cmep {

enum class Method { enumeration, transform };

std::string to_string(Method m);

struct EulerianResult {
  MultisetSpec spec;
  IntPoly poly;
  Method method = Method::transform;
  int degree = 0;     // degree of the trimmed polynomial
  int codegree = 0;
  bool symmetric_wrt_degree = false;
};

struct DegreeCodegree {
  int degree;
  int codegree;
};

/// m + 1 - max ceil((m_k+1)/r_k) and the maximum itself.
DegreeCodegree degree_and_codegree(const MultisetSpec& spec);

/// codeg * r_j == m_j + 1 for every j.
bool symmetry_criterion(const MultisetSpec& spec);

/// Sum of x^des over all colored permutations.
EulerianResult eulerian_by_enumeration(const MultisetSpec& spec,
                                       std::uint64_t cap = kDefaultEnumerationCap);

/// prod_k C(r_k t + m_k, m_k) in the variable t.
RatPoly ehrhart_product(const MultisetSpec& spec);

/// h* of the Ehrhart product.
EulerianResult eulerian_by_transform(const MultisetSpec& spec);

/**
 * Lattice points of t * (r_1 Delta_{m_1} x ... x r_n Delta_{n}) counted
 * straight from the inequalities x >= 0, sum of block j <= t r_j (strict in
 * both when interior is set).
 */
Integer brute_lattice_count(const MultisetSpec& spec, int t, bool interior,
                            std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace cmep

#endif  // CMEP_EULERIAN_HPP
