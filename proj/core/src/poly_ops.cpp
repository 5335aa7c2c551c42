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

#include "cmep/poly_ops.hpp"

#include <stdexcept>

namespace cmep {

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {RatPoly({}, a.var()), a};
  std::vector<Rational> quo(static_cast<std::size_t>(da - db) + 1);
  const Rational& lead = b.leading();
  for (int i = da; i >= db; --i) {
    Rational c = rem[i] / lead;
    if (c == 0) continue;
    quo[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeff(j);
  }
  return {RatPoly(std::move(quo), a.var()), RatPoly(std::move(rem), a.var())};
}

RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading();
  return p * inv;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

RatPoly exact_quotient(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_quotient: nonzero remainder");
  return q;
}

}  // namespace cmep
