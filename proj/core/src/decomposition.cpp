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

#include "cmep/decomposition.hpp"

#include "cmep/errors.hpp"
#include "cmep/poly_ops.hpp"

namespace cmep {

SymmetricDecomposition symmetric_decomposition(const IntPoly& p, int n) {
  detail::require_degree_at_most(p, n, "symmetric_decomposition");
  std::vector<Integer> a(static_cast<std::size_t>(n) + 1);
  std::vector<Integer> b(static_cast<std::size_t>(n));
  Integer acc_a = 0;
  Integer acc_b = 0;
  for (int k = 0; k <= n; ++k) {
    acc_a += p.coeff(k);
    if (n + 1 - k <= n) acc_a -= p.coeff(n + 1 - k);
    a[k] = acc_a;
    if (k < n) {
      acc_b += p.coeff(n - k) - p.coeff(k);
      b[k] = acc_b;
    }
  }
  SymmetricDecomposition d{IntPoly(std::move(a), p.var()), IntPoly(std::move(b), p.var()), n};
  IntPoly x_b = d.b * IntPoly({0, 1}, p.var());
  if (d.a + x_b != p || !palindromic(d.a, n) || (n >= 1 && !palindromic(d.b, n - 1)))
    throw std::logic_error("symmetric_decomposition: invariant violated");
  return d;
}

bool GammaVector::nonnegative() const {
  for (const auto& g : gammas)
    if (g < 0) return false;
  return true;
}

IntPoly GammaVector::reconstruct() const {
  IntPoly out;
  for (std::size_t i = 0; i < gammas.size(); ++i)
    out += IntPoly::monomial(gammas[i], i) * one_plus_x_pow(static_cast<unsigned>(n - 2 * static_cast<int>(i)));
  return out;
}

GammaVector gamma_expansion(const IntPoly& p, int n) {
  if (n < 0 || p.degree() > n || !palindromic(p, n))
    throw NotPalindromicError("gamma_expansion: polynomial is not symmetric about degree " +
                              std::to_string(n));
  GammaVector g;
  g.n = n;
  IntPoly rest = p;
  // Peel the lowest remaining coefficient against x^i (1+x)^{n-2i}.
  for (int i = 0; 2 * i <= n; ++i) {
    Integer c = rest.coeff(i);
    g.gammas.push_back(c);
    rest -= IntPoly::monomial(c, i) * one_plus_x_pow(static_cast<unsigned>(n - 2 * i));
  }
  if (!rest.is_zero()) throw std::logic_error("gamma_expansion: nonzero residue");
  return g;
}

ShapeReport shape_checks(const IntPoly& p, int n) {
  ShapeReport s;
  const int d = p.degree();
  s.nonnegative = true;
  for (const auto& c : p.coefficients())
    if (c < 0) s.nonnegative = false;

  s.unimodal = true;
  bool descending = false;
  for (int i = 1; i <= d; ++i) {
    if (p.coeff(i) < p.coeff(i - 1)) descending = true;
    else if (descending && p.coeff(i) > p.coeff(i - 1)) s.unimodal = false;
  }

  s.log_concave = true;
  for (int i = 1; i < d; ++i)
    if (p.coeff(i) * p.coeff(i) < p.coeff(i - 1) * p.coeff(i + 1)) s.log_concave = false;

  // p_0 <= p_n <= p_1 <= p_{n-1} <= ...
  s.alternatingly_increasing = n >= d;
  if (s.alternatingly_increasing) {
    std::vector<int> chain;
    int lo = 0;
    int hi = n;
    while (lo <= hi) {
      chain.push_back(lo++);
      if (lo <= hi) chain.push_back(hi--);
    }
    for (std::size_t i = 1; i < chain.size(); ++i)
      if (p.coeff(chain[i - 1]) > p.coeff(chain[i])) s.alternatingly_increasing = false;
  }
  return s;
}

}  // namespace cmep
