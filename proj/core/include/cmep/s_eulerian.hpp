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

#ifndef CMEP_S_EULERIAN_HPP
#define CMEP_S_EULERIAN_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cmep/combinatorics.hpp"
#include "cmep/decomposition.hpp"
#include "cmep/polynomial.hpp"

namespace cmep {

using SSequence = std::vector<int>;
using InversionSequence = std::vector<int>;

void validate_s_sequence(std::span<const int> s);

/// Ascents of e with e_0 = 0, s_0 = 1: positions i in 0..n-1 with
/// e_i / s_i < e_{i+1} / s_{i+1}, compared by cross-multiplication.
int asc_inversion(std::span<const int> e, std::span<const int> s);

/// E_n^s: sum of x^asc(e) over 0 <= e_i < s_i.
IntPoly s_eulerian_poly(std::span<const int> s, std::uint64_t cap = kDefaultEnumerationCap);

/// r * (1, 1, 3, 2, 5, 3, ...): i for odd i, i/2 for even i.
SSequence hat_sequence(int n, int r);

struct SEqualityCheck {
  std::string name;
  SSequence s;
  MultisetSpec spec;
  IntPoly e_poly;
  IntPoly a_poly;
  bool equal = false;
};

/// E_n^{(r,2r,...,nr)} vs A(1, r), E_{2n}^{r hat} vs A(2, r) and
/// E_{2n-1}^{r hat} vs A((2,...,2,1), r).
std::vector<SEqualityCheck> verify_s_equalities(int n, int r,
                                                std::uint64_t cap = kDefaultEnumerationCap);

struct SearchCandidate {
  SSequence s;
  IntPoly poly;
  bool match = false;
};

struct SearchReport {
  IntPoly target;
  Integer size;  // N = target(1)
  std::vector<SearchCandidate> evaluated;
  std::vector<SSequence> matches;
  std::size_t factorizations = 0;
  std::size_t duplicates_merged = 0;
  std::vector<std::string> reductions;
};

/**
 * Every s with prod s_i = N built from an ordered factorization of N into
 * factors >= 2 with at most one 1 in each gap, ends included. Runs of 1s
 * collapse to a single 1 without changing E, so these candidates are all
 * that can occur.
 */
SearchReport not_s_eulerian_search(const IntPoly& target, std::uint64_t cap = 1'000'000);

struct DecompositionRemarkReport {
  int n = 0;
  MultisetSpec spec;
  IntPoly polynomial;
  SymmetricDecomposition decomposition;
  SSequence a_sequence;
  SSequence b_sequence;
  IntPoly a_expected;
  IntPoly b_expected;
  bool a_matches = false;
  bool b_matches = false;
};

/**
 * Decomposes A((2,...,2,1), 1) of length n at its degree and compares
 * a with E^{s~} of length 2n-1, s~ being the hat sequence with its last
 * entry lowered by one, and b with E^{hat} of length 2n-2.
 */
DecompositionRemarkReport verify_decomposition_remark(int n,
                                                      std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace cmep

#endif  // CMEP_S_EULERIAN_HPP
