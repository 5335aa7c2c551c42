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

#include "cmep/ehrhart.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "cmep/errors.hpp"
#include "cmep/poly_ops.hpp"

namespace cmep {

IntPoly hstar_from_ehrhart(const RatPoly& L, int d) {
  if (d < 0) throw DegreeError("hstar_from_ehrhart: negative dimension");
  if (L.degree() > d)
    throw DegreeError("hstar_from_ehrhart: Ehrhart polynomial degree exceeds dimension");
  std::vector<Integer> values;
  values.reserve(static_cast<std::size_t>(d) + 1);
  for (int t = 0; t <= d; ++t) {
    Rational v = L.evaluate(Rational(t));
    if (!is_integral(v))
      throw NotEhrhartError("L(" + std::to_string(t) + ") = " + to_string(v) +
                            " is not an integer");
    values.push_back(v.get_num());
  }
  std::vector<Integer> h(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    Integer acc = 0;
    for (int i = 0; i <= j; ++i) {
      Integer term = binomial(d + 1, i) * values[j - i];
      if (i % 2 == 0) acc += term; else acc -= term;
    }
    h[j] = acc;
  }
  return IntPoly(std::move(h), "x");
}

RatPoly subdivision_operator(const RatPoly& p) {
  const int d = p.degree();
  if (d < 0) return RatPoly({}, "x");
  std::vector<Rational> out(static_cast<std::size_t>(d) + 1);
  // Difference table: after k passes table[0] holds Delta^k p(0).
  std::vector<Rational> table;
  for (int t = 0; t <= d; ++t) table.push_back(p.evaluate(Rational(t)));
  for (int k = 0; k <= d; ++k) {
    out[k] = table[0];
    for (int i = 0; i + 1 < static_cast<int>(table.size()); ++i)
      table[i] = table[i + 1] - table[i];
    table.pop_back();
  }
  return RatPoly(std::move(out), "x");
}

std::vector<Rational> magic_basis_expansion(const RatPoly& L, int d) {
  if (d < 0 || L.degree() > d) throw DegreeError("magic_basis_expansion: degree exceeds d");
  std::vector<Rational> c;
  RatPoly rest = L;
  const RatPoly one_plus_t(std::vector<Rational>{Rational(1), Rational(1)}, L.var());
  const RatPoly t(std::vector<Rational>{Rational(0), Rational(1)}, L.var());
  for (int k = d; k >= 0; --k) {
    Rational c0 = rest.coeff(0);
    c.push_back(c0);
    rest -= one_plus_t.pow(static_cast<unsigned>(k)) * c0;
    if (k == 0) break;
    auto [q, r] = divmod(rest, t);
    if (!r.is_zero()) throw std::logic_error("magic_basis_expansion: inexact division");
    rest = q;
  }
  if (!rest.is_zero()) throw std::logic_error("magic_basis_expansion: nonzero residue");
  return c;
}

IntPoly subdivision_image_of_hstar(const IntPoly& p, int d) {
  if (d < 0 || p.degree() > d) throw DegreeError("subdivision_image_of_hstar: degree exceeds d");
  IntPoly out({}, "x");
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i) == 0) continue;
    out += IntPoly::monomial(p.coeff(i), i) * one_plus_x_pow(static_cast<unsigned>(d - i));
  }
  return out;
}

}  // namespace cmep
