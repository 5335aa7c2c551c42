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

#ifndef CMEP_EHRHART_HPP
#define CMEP_EHRHART_HPP

#include "cmep/polynomial.hpp"

namespace cmep {

/**
 * h*-polynomial of a degree-d polytope from its Ehrhart polynomial L(t):
 * h*_j = sum_{i=0}^{j} (-1)^i C(d+1, i) L(j-i).
 *
 * Throws NotEhrhartError if L is not integer-valued at t = 0..d and
 * DegreeError if deg L > d.
 */
IntPoly hstar_from_ehrhart(const RatPoly& L, int d);

// Forward differences: the coefficient of x^k is the coefficient of C(t, k).
RatPoly subdivision_operator(const RatPoly& p);

// c_0..c_d with L = sum_i c_i t^i (1+t)^{d-i}.
std::vector<Rational> magic_basis_expansion(const RatPoly& L, int d);

// (1+x)^d p(x/(1+x)); equals subdivision_operator(L) when p = h*(L).
IntPoly subdivision_image_of_hstar(const IntPoly& p, int d);

}  // namespace cmep

#endif  // CMEP_EHRHART_HPP
