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

#include "cmep/eulerian.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "cmep/ehrhart.hpp"
#include "cmep/poly_ops.hpp"

namespace cmep {

std::string to_string(Method m) {
  return m == Method::enumeration ? "enumeration" : "transform";
}

DegreeCodegree degree_and_codegree(const MultisetSpec& spec) {
  int codeg = 0;
  for (int k = 1; k <= spec.n(); ++k) {
    int num = spec.multiplicity(k) + 1;
    int r = spec.colors(k);
    codeg = std::max(codeg, (num + r - 1) / r);
  }
  return {spec.total() + 1 - codeg, codeg};
}

bool symmetry_criterion(const MultisetSpec& spec) {
  const int codeg = degree_and_codegree(spec).codegree;
  for (int k = 1; k <= spec.n(); ++k)
    if (codeg * spec.colors(k) != spec.multiplicity(k) + 1) return false;
  return true;
}

namespace {

EulerianResult finish(const MultisetSpec& spec, IntPoly poly, Method method) {
  EulerianResult res;
  res.spec = spec;
  res.method = method;
  res.degree = poly.degree();
  res.codegree = degree_and_codegree(spec).codegree;
  res.symmetric_wrt_degree = palindromic(poly, std::max(res.degree, 0));
  res.poly = std::move(poly);
  return res;
}

}  // namespace

EulerianResult eulerian_by_enumeration(const MultisetSpec& spec, std::uint64_t cap) {
  std::vector<std::uint64_t> histogram(static_cast<std::size_t>(spec.total()) + 1, 0);
  const int n = spec.n();
  for_each_colored_word(
      spec,
      [&](std::span<const ColoredLetter> w) {
        int des = 0;
        for (std::size_t j = 0; j + 1 < w.size(); ++j)
          if (compare_colored(w[j], w[j + 1]) > 0) ++des;
        if (compare_colored(w.back(), ColoredLetter{n + 1, 1}) > 0) ++des;
        ++histogram[des];
      },
      cap);
  std::vector<Integer> coeffs;
  for (auto h : histogram) coeffs.emplace_back(std::to_string(h));
  return finish(spec, IntPoly(std::move(coeffs), "x"), Method::enumeration);
}

RatPoly ehrhart_product(const MultisetSpec& spec) {
  RatPoly L = RatPoly::constant(Rational(1), "t");
  for (int k = 1; k <= spec.n(); ++k) {
    const int mk = spec.multiplicity(k);
    const int rk = spec.colors(k);
    // C(r t + m, m) = prod_{i=1}^{m} (r t + i) / i
    for (int i = 1; i <= mk; ++i) {
      RatPoly factor(std::vector<Rational>{Rational(1), make_rational(rk, i)}, "t");
      L *= factor;
    }
  }
  return L;
}

EulerianResult eulerian_by_transform(const MultisetSpec& spec) {
  IntPoly h = hstar_from_ehrhart(ehrhart_product(spec), spec.total());
  return finish(spec, std::move(h), Method::transform);
}

namespace {

// Visits every vector of `len` integers, each >= low, with sum <= budget.
Integer count_block(int len, long low, long budget, std::uint64_t cap,
                    std::uint64_t& visited) {
  if (len == 0) {
    if (++visited > cap) throw CapacityError("lattice points exceed cap", cap);
    return Integer(1);
  }
  Integer total = 0;
  for (long v = low; v <= budget - low * (len - 1); ++v)
    total += count_block(len - 1, low, budget - v, cap, visited);
  return total;
}

}  // namespace

Integer brute_lattice_count(const MultisetSpec& spec, int t, bool interior,
                            std::uint64_t cap) {
  if (t < 0) throw std::invalid_argument("dilation must be nonnegative");
  // Blocks share no inequality, so the count factors over blocks.
  Integer total = 1;
  std::uint64_t visited = 0;
  for (int k = 1; k <= spec.n(); ++k) {
    long bound = static_cast<long>(t) * spec.colors(k);
    long low = 0;
    if (interior) {
      low = 1;
      bound -= 1;
    }
    total *= count_block(spec.multiplicity(k), low, bound, cap, visited);
    if (total == 0) break;
  }
  return total;
}

}  // namespace cmep
