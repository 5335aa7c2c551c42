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

#include "cmep/s_eulerian.hpp"

#include <set>
#include <stdexcept>

#include "cmep/eulerian.hpp"

namespace cmep {

void validate_s_sequence(std::span<const int> s) {
  for (int v : s)
    if (v < 1) throw std::invalid_argument("s-sequence entries must be positive");
}

int asc_inversion(std::span<const int> e, std::span<const int> s) {
  if (e.size() != s.size()) throw std::invalid_argument("e and s differ in length");
  validate_s_sequence(s);
  int asc = 0;
  long prev_e = 0;
  long prev_s = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] >= s[i]) throw std::invalid_argument("inversion sequence out of bounds");
    if (prev_e * s[i] < static_cast<long>(e[i]) * prev_s) ++asc;
    prev_e = e[i];
    prev_s = s[i];
  }
  return asc;
}

IntPoly s_eulerian_poly(std::span<const int> s, std::uint64_t cap) {
  validate_s_sequence(s);
  Integer count = 1;
  for (int v : s) count *= v;
  check_capacity(count, cap, "inversion sequences");
  const std::size_t n = s.size();
  std::vector<std::uint64_t> histogram(n + 1, 0);
  std::vector<int> e(n, 0);
  while (true) {
    ++histogram[asc_inversion(e, s)];
    std::size_t i = n;
    while (i > 0 && e[i - 1] == s[i - 1] - 1) e[--i] = 0;
    if (i == 0) break;
    ++e[i - 1];
  }
  std::vector<Integer> coeffs;
  for (auto h : histogram) coeffs.emplace_back(std::to_string(h));
  return IntPoly(std::move(coeffs), "x");
}

SSequence hat_sequence(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("hat_sequence needs n >= 0 and r >= 1");
  SSequence s;
  for (int i = 1; i <= n; ++i) s.push_back((i % 2 == 1 ? i : i / 2) * r);
  return s;
}

namespace {

SEqualityCheck check(std::string name, SSequence s, MultisetSpec spec, std::uint64_t cap) {
  SEqualityCheck c;
  c.name = std::move(name);
  c.e_poly = s_eulerian_poly(s, cap);
  c.a_poly = eulerian_by_transform(spec).poly;
  c.equal = c.e_poly == c.a_poly;
  c.s = std::move(s);
  c.spec = std::move(spec);
  return c;
}

void ordered_factorizations(long n, std::vector<int>& prefix, std::vector<SSequence>& out) {
  if (n == 1) {
    out.push_back(prefix);
    return;
  }
  for (long f = 2; f <= n; ++f) {
    if (n % f != 0) continue;
    prefix.push_back(static_cast<int>(f));
    ordered_factorizations(n / f, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<SEqualityCheck> verify_s_equalities(int n, int r, std::uint64_t cap) {
  if (n < 1 || r < 1) throw std::invalid_argument("verify_s_equalities needs n, r >= 1");
  std::vector<SEqualityCheck> out;
  SSequence multiples;
  for (int i = 1; i <= n; ++i) multiples.push_back(i * r);
  out.push_back(check("E_n^(r,2r,...,nr) = A(1,...,1; r)", multiples,
                      MultisetSpec::uniform(std::vector<int>(n, 1), r), cap));
  out.push_back(check("E_2n^(r hat) = A(2,...,2; r)", hat_sequence(2 * n, r),
                      MultisetSpec::uniform(std::vector<int>(n, 2), r), cap));
  std::vector<int> m(n, 2);
  m.back() = 1;
  out.push_back(check("E_(2n-1)^(r hat) = A(2,...,2,1; r)", hat_sequence(2 * n - 1, r),
                      MultisetSpec::uniform(m, r), cap));
  return out;
}

SearchReport not_s_eulerian_search(const IntPoly& target, std::uint64_t cap) {
  SearchReport report;
  report.target = target;
  report.size = target.evaluate(Integer(1));
  if (report.size < 1) throw std::invalid_argument("search target must have a positive value at 1");
  check_capacity(report.size, cap, "search target value");
  const long n = report.size.get_si();

  std::vector<SSequence> factorizations;
  std::vector<int> prefix;
  ordered_factorizations(n, prefix, factorizations);
  report.factorizations = factorizations.size();
  report.reductions = {
      "a 1 placed next to another 1 leaves E unchanged, so each gap holds at most one 1",
      "sequences with product different from target(1) cannot match since E(1) = prod s_i",
  };

  std::set<SSequence> seen;
  std::vector<SSequence> candidates;
  for (const auto& f : factorizations) {
    const std::size_t gaps = f.size() + 1;
    for (unsigned long mask = 0; mask < (1UL << gaps); ++mask) {
      SSequence s;
      for (std::size_t g = 0; g < gaps; ++g) {
        if (mask & (1UL << g)) s.push_back(1);
        if (g < f.size()) s.push_back(f[g]);
      }
      if (s.empty()) continue;  // n >= 1; the empty word reduces to (1)
      if (!seen.insert(s).second) {
        ++report.duplicates_merged;
        continue;
      }
      candidates.push_back(std::move(s));
    }
  }
  for (auto& s : candidates) {
    SearchCandidate c;
    c.poly = s_eulerian_poly(s);
    c.match = c.poly == target;
    c.s = std::move(s);
    if (c.match) report.matches.push_back(c.s);
    report.evaluated.push_back(std::move(c));
  }
  return report;
}

DecompositionRemarkReport verify_decomposition_remark(int n, std::uint64_t cap) {
  if (n < 1) throw std::invalid_argument("verify_decomposition_remark needs n >= 1");
  DecompositionRemarkReport r;
  r.n = n;
  std::vector<int> m(n, 2);
  m.back() = 1;
  r.spec = MultisetSpec::uniform(m, 1);
  r.polynomial = eulerian_by_transform(r.spec).poly;
  const int d = r.polynomial.degree();
  r.decomposition = symmetric_decomposition(r.polynomial, d);
  if (n == 1) {
    // The multiset {1}: a = 1 and b = 0, nothing to compare against.
    r.a_expected = IntPoly({1});
    r.b_expected = IntPoly();
  } else {
    r.a_sequence = hat_sequence(2 * n - 1, 1);
    r.a_sequence.back() -= 1;
    r.b_sequence = hat_sequence(2 * n - 2, 1);
    r.a_expected = s_eulerian_poly(r.a_sequence, cap);
    r.b_expected = s_eulerian_poly(r.b_sequence, cap);
  }
  r.a_matches = r.decomposition.a == r.a_expected;
  r.b_matches = r.decomposition.b == r.b_expected;
  return r;
}

}  // namespace cmep
