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

#ifndef CMEP_POLY_OPS_HPP
#define CMEP_POLY_OPS_HPP

#include <string>
#include <utility>
#include <vector>

#include "cmep/errors.hpp"
#include "cmep/polynomial.hpp"

namespace cmep {

namespace detail {
template <class C>
void require_degree_at_most(const Polynomial<C>& p, int d, const char* op) {
  if (d < 0 || p.degree() > d)
    throw DegreeError(std::string(op) + ": degree " + std::to_string(p.degree()) +
                      " exceeds " + std::to_string(d));
}
}  // namespace detail

/// x^d p(1/x).
template <class C>
Polynomial<C> reciprocal(const Polynomial<C>& p, int d) {
  detail::require_degree_at_most(p, d, "reciprocal");
  std::vector<C> v = p.padded(static_cast<std::size_t>(d) + 1);
  std::vector<C> out(v.rbegin(), v.rend());
  return Polynomial<C>(std::move(out), p.var());
}

/// (-1)^d p(-1-x).
template <class C>
Polynomial<C> reflect(const Polynomial<C>& p, int d) {
  detail::require_degree_at_most(p, d, "reflect");
  Polynomial<C> inner(std::vector<C>{C(-1), C(-1)}, p.var());
  Polynomial<C> out = p.compose(inner);
  if (d % 2 != 0) out = -out;
  return out;
}

/// p_s = p_{n-s} for 0 <= s <= n.
template <class C>
bool palindromic(const Polynomial<C>& p, int n) {
  detail::require_degree_at_most(p, n, "palindromic");
  for (int s = 0; s <= n; ++s)
    if (p.coeff(s) != p.coeff(n - s)) return false;
  return true;
}

// Euclidean division over the rationals; throws on a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly monic(const RatPoly& p);
// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(RatPoly a, RatPoly b);
// Exact quotient, asserting a zero remainder.
RatPoly exact_quotient(const RatPoly& a, const RatPoly& b);

}  // namespace cmep

#endif  // CMEP_POLY_OPS_HPP
