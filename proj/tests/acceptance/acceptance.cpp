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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cmep/decomposition.hpp"
#include "cmep/ehrhart.hpp"
#include "cmep/eulerian.hpp"
#include "cmep/identities.hpp"
#include "cmep/poly_ops.hpp"
#include "cmep/real_roots.hpp"
#include "cmep/s_eulerian.hpp"
#include "cmep/self_interlacing.hpp"
#include "cmep/trees.hpp"

namespace {

using namespace cmep;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) note << "first failure: " << what << "; ";
    pass = false;
  }
};

std::string poly_str(const IntPoly& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.coefficients().size(); ++i)
    s += (i ? "," : "") + to_string(p.coefficients()[i]);
  return s + "]";
}

std::string spec_str(const MultisetSpec& s) {
  std::string out = "m=(";
  for (std::size_t i = 0; i < s.m().size(); ++i) out += (i ? "," : "") + std::to_string(s.m()[i]);
  out += ") r=(";
  for (std::size_t i = 0; i < s.r().size(); ++i) out += (i ? "," : "") + std::to_string(s.r()[i]);
  return out + ")";
}

// Compositions with at most max_len parts, each in [1, max_part], summing to at most max_total.
std::vector<std::vector<int>> compositions(int max_len, int max_part, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int total) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int v = 1; v <= max_part && total + v <= max_total; ++v) {
      cur.push_back(v);
      rec(total + v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Every r with lo_j <= r_j <= hi_j.
std::vector<std::vector<int>> color_vectors(const std::vector<int>& lo, const std::vector<int>& hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(lo);
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == hi[i]) {
      cur[i] = lo[i];
      ++i;
    }
    if (i == cur.size()) break;
    ++cur[i];
  }
  return out;
}

std::vector<MultisetSpec> box_grid(int max_len, int max_part, int max_color, int max_total) {
  std::vector<MultisetSpec> out;
  for (const auto& m : compositions(max_len, max_part, max_total))
    for (const auto& r : color_vectors(std::vector<int>(m.size(), 1), std::vector<int>(m.size(), max_color)))
      out.emplace_back(m, r);
  return out;
}

// Specs with r_j >= m_j + 1; r_j is taken up to m_j + 3.
std::vector<MultisetSpec> interlacing_grid(int max_total) {
  std::vector<MultisetSpec> out;
  for (const auto& m : compositions(max_total, max_total, max_total)) {
    std::vector<int> lo, hi;
    for (int mj : m) {
      lo.push_back(mj + 1);
      hi.push_back(mj + 3);
    }
    for (const auto& r : color_vectors(lo, hi)) out.emplace_back(m, r);
  }
  return out;
}

bool nonneg(const IntPoly& p) {
  for (const auto& c : p.coefficients())
    if (c < 0) return false;
  return true;
}

// --------------------------------------------------------------- criteria

Outcome criterion1() {
  Outcome o;
  const auto start = Clock::now();
  const auto grid = box_grid(3, 3, 3, 7);
  for (const auto& spec : grid) {
    const auto e = eulerian_by_enumeration(spec);
    const auto t = eulerian_by_transform(spec);
    o.require(e.poly == t.poly, spec_str(spec) + " enumeration " + poly_str(e.poly) + " vs transform " +
                                    poly_str(t.poly));
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  o.require(secs < 60.0, "runtime " + std::to_string(secs) + " s exceeds 60 s");
  o.note << grid.size() << " specs, " << secs << " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const MultisetSpec spec({3, 3}, {1, 1});
  const auto e = eulerian_by_enumeration(spec);
  const auto t = eulerian_by_transform(spec);
  const auto dc = degree_and_codegree(spec);
  o.require(e.poly == IntPoly({1, 9, 9, 1}) && t.poly == e.poly, "polynomial " + poly_str(e.poly));
  o.require(e.poly.evaluate(Integer(1)) == 20, "coefficient sum");
  o.require(dc.degree == 3 && dc.codegree == 4 && t.degree == 3 && t.codegree == 4, "degree/codegree");
  o.note << "A = " << poly_str(t.poly) << ", degree " << dc.degree << ", codegree " << dc.codegree;
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto d4 = symmetric_decomposition(IntPoly{1, 5, 17, 15, 2}, 4);
  o.require(d4.a == IntPoly({1, 4, 6, 4, 1}) && d4.b == IntPoly({1, 11, 11, 1}), "degree-4 example");
  const auto d2 = symmetric_decomposition(IntPoly{1, 4, 4}, 2);
  o.require(d2.a == IntPoly({1, 1, 1}) && d2.b == IntPoly({3, 3}), "(1+2x)^2 example");
  o.note << "a=" << poly_str(d4.a) << " b=" << poly_str(d4.b) << "; a=" << poly_str(d2.a)
         << " b=" << poly_str(d2.b);
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto grid = box_grid(3, 4, 4, 8);
  int symmetric = 0;
  for (const auto& spec : grid) {
    const auto res = eulerian_by_transform(spec);
    const bool direct = palindromic(res.poly, res.degree);
    const bool criterion = symmetry_criterion(spec);
    o.require(direct == criterion, spec_str(spec) + " criterion disagrees with palindromicity");
    symmetric += direct;

    bool all_one = true, constant_m = true, shifted = true;
    for (int k = 1; k <= spec.n(); ++k) {
      all_one = all_one && spec.colors(k) == 1;
      constant_m = constant_m && spec.multiplicity(k) == spec.multiplicity(1);
      shifted = shifted && spec.colors(k) == spec.multiplicity(k) + 1;
    }
    if (all_one) o.require(direct == constant_m, spec_str(spec) + " uncolored case");
    o.require(palindromic(res.poly, spec.total()) == shifted, spec_str(spec) + " symmetry about m");
  }
  o.note << grid.size() << " specs, " << symmetric << " symmetric";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto start = Clock::now();
  const auto grid = interlacing_grid(6);
  int strict_fail = 0, strict_fail_b_zero = 0, weak_fail = 0, corollary_fail = 0;
  std::string first_strict;
  for (const auto& spec : grid) {
    const auto res = eulerian_by_transform(spec);
    const IntPoly& p = res.poly;
    const int d = spec.total();
    const auto rep = self_interlacing_suite(p, d);
    bool strict_ok = rep.hypothesis_met, weak_ok = rep.hypothesis_met;
    for (const auto& c : rep.conditions) {
      strict_ok = strict_ok && c.strict;
      weak_ok = weak_ok && c.weak;
    }
    if (!strict_ok) {
      ++strict_fail;
      if (rep.decomposition.b.is_zero()) ++strict_fail_b_zero;
      if (first_strict.empty()) {
        first_strict = spec_str(spec) + " (";
        for (const auto& c : rep.conditions)
          if (!c.strict) first_strict += c.name + "; ";
        first_strict += ")";
      }
    }
    weak_fail += !weak_ok;

    const auto shape = shape_checks(p, d);
    bool cor = real_root_certificate(p).real_rooted && shape.log_concave && shape.unimodal &&
               shape.alternatingly_increasing;
    const auto& a = rep.decomposition.a;
    const auto& b = rep.decomposition.b;
    for (const auto& [part, deg] : {std::pair<const IntPoly*, int>{&a, d}, {&b, d - 1}}) {
      if (part->is_zero()) continue;
      const auto s = shape_checks(*part, deg);
      cor = cor && real_root_certificate(*part).real_rooted && s.log_concave && s.unimodal &&
            nonneg(*part) && gamma_expansion(*part, deg).nonnegative();
    }
    corollary_fail += !cor;
    o.require(cor, spec_str(spec) + " corollary consequences");
  }
  o.require(strict_fail == 0, std::to_string(strict_fail) + " specs fail a strict condition, e.g. " + first_strict);
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  o.require(secs < 300.0, "runtime " + std::to_string(secs) + " s exceeds 300 s");
  o.note << grid.size() << " specs (r_j in [m_j+1, m_j+3]); strict failures " << strict_fail << " of which "
         << strict_fail_b_zero << " have b = 0 (r_j = m_j+1 for every j); weak failures " << weak_fail
         << "; corollary failures " << corollary_fail << "; " << secs << " s";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto start = Clock::now();
  const TruncationCaps caps{4, 24};
  int runs = 0;
  auto check = [&](IdentityKind kind, const MultisetSpec& spec) {
    const auto rep = verify_identity(kind, spec, caps);
    ++runs;
    std::string w;
    if (rep.witness) w = " lhs " + to_string(rep.witness->lhs) + " rhs " + to_string(rep.witness->rhs);
    o.require(rep.match, to_string(kind) + " " + spec_str(spec) + w);
  };
  const auto ms = compositions(5, 5, 5);
  for (const auto& m : ms) {
    const std::size_t n = m.size();
    check(IdentityKind::classic, MultisetSpec::uniform(m, 1));
    check(IdentityKind::lin_a, MultisetSpec::uniform(m, 2));
    check(IdentityKind::lin_b, MultisetSpec::uniform(m, 2));
    for (int r = 1; r <= 3; ++r) {
      check(IdentityKind::fdmaj, MultisetSpec::uniform(m, r));
      check(IdentityKind::second_q, MultisetSpec::uniform(m, r));
      check(IdentityKind::flag, MultisetSpec::uniform(m, r));
    }
    for (const auto& r : color_vectors(std::vector<int>(n, 1), std::vector<int>(n, 2)))
      for (IdentityKind kind : {IdentityKind::macmahon_mv, IdentityKind::ascent_mv, IdentityKind::second_mv})
        check(kind, MultisetSpec(m, r));
  }
  for (const auto& m : compositions(6, 6, 6)) check(IdentityKind::equidistribution, MultisetSpec::uniform(m, 2));

  int flag_sets = 0;
  for (const auto& m : compositions(3, 3, 3)) {
    const auto base = expand_identity(IdentityKind::flag, MultisetSpec::uniform(m, 1), caps);
    for (int r = 2; r <= 3; ++r) {
      const auto other = expand_identity(IdentityKind::flag, MultisetSpec::uniform(m, r), caps);
      o.require(other.rhs == base.rhs, "flag right side depends on r");
      o.require(other.lhs == base.lhs, "flag left side depends on r");
    }
    ++flag_sets;
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  o.note << runs << " identity checks over " << ms.size() << " multiplicity vectors; flag r-independence on "
         << flag_sets << " vectors; " << secs << " s";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto grid = box_grid(3, 4, 4, 8);
  int gorenstein = 0;
  for (const auto& spec : grid) {
    const RatPoly L = ehrhart_product(spec);
    for (int t = 1; t <= 3; ++t)
      o.require(Rational(brute_lattice_count(spec, t, false)) == L.evaluate(Rational(t)),
                spec_str(spec) + " t=" + std::to_string(t));
    const int c = degree_and_codegree(spec).codegree;
    const bool one = brute_lattice_count(spec, c, true) == 1;
    gorenstein += one;
    o.require(one == symmetry_criterion(spec), spec_str(spec) + " interior count at codegree");
  }
  o.note << grid.size() << " specs; " << gorenstein << " with a unique interior point at the codegree";
  return o;
}

Outcome criterion8() {
  Outcome o;
  int checks = 0;
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r) {
      if (n <= 3) {
        for (const auto& c : verify_s_equalities(n, r)) {
          o.require(c.equal, c.name + " n=" + std::to_string(n) + " r=" + std::to_string(r));
          ++checks;
        }
      } else {
        SSequence s;
        for (int i = 1; i <= n; ++i) s.push_back(i * r);
        o.require(s_eulerian_poly(s) == eulerian_by_transform(MultisetSpec::uniform(std::vector<int>(n, 1), r)).poly,
                  "multiples n=4 r=" + std::to_string(r));
        ++checks;
      }
    }
  const auto e = s_eulerian_poly(std::vector<int>{1, 3, 1, 3});
  o.require(e == IntPoly({1, 4, 4}), "E^(1,3,1,3) = " + poly_str(e));
  o.note << checks << " equalities plus E^(1,3,1,3) = " << poly_str(e);
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto start = Clock::now();
  const auto neg = not_s_eulerian_search(IntPoly{1, 9, 9, 1});
  o.require(neg.matches.empty(), "a sequence reproduces 1+9x+9x^2+x^3");
  const auto pos = not_s_eulerian_search(IntPoly{1, 4, 4});
  bool found = false;
  for (const auto& s : pos.matches) found = found || s == SSequence{1, 3, 1, 3};
  o.require(found, "(1,3,1,3) missing from the positive control");
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  o.require(secs < 300.0, "runtime");
  o.note << neg.evaluated.size() << " candidates for N=20, 0 expected matches, got " << neg.matches.size()
         << "; control: " << pos.matches.size() << " matches; " << secs << " s";
  return o;
}

Outcome criterion10() {
  Outcome o;
  const std::vector<std::pair<int, int>> uniform{{2, 1}, {3, 1}, {4, 1}, {2, 2}, {3, 2}, {2, 3}};
  const std::vector<std::pair<int, int>> almost{{3, 2}, {4, 2}, {3, 3}};
  for (const auto& [n, k] : uniform) {
    const auto res = eulerian_by_transform(MultisetSpec::uniform(std::vector<int>(static_cast<std::size_t>(n), k), 1));
    o.require(tree_gamma(almost_uniform_labels(n, k)) == gamma_expansion(res.poly, res.degree),
              "tree gamma vs A(k..k) at (" + std::to_string(n) + "," + std::to_string(k) + ")");
  }
  for (const auto& [n, k] : almost) {
    std::vector<int> labels;
    for (int v = 1; v <= n - 2; ++v) labels.insert(labels.end(), static_cast<std::size_t>(k), v);
    labels.push_back(n - 1);
    labels.push_back(n);
    const auto gh = partition_GH(n, k);
    o.require(tree_gamma(labels) == gamma_expansion(gh.decomposition.a, gh.degree),
              "tree gamma vs a-part at (" + std::to_string(n) + "," + std::to_string(k) + ")");
  }
  auto all = uniform;
  all.insert(all.end(), almost.begin(), almost.end());
  for (const auto& [n, k] : all) {
    const auto gh = partition_GH(n, k);
    o.require(gh.g_matches && gh.h_matches,
              "G/H sums at (" + std::to_string(n) + "," + std::to_string(k) + ")");
  }
  o.note << uniform.size() + almost.size() << " gamma comparisons, " << all.size() << " G/H partitions";
  return o;
}

Outcome criterion11() {
  Outcome o;
  for (long k = 0; k <= 6; ++k) {
    RatPoly c = RatPoly::constant(Rational(1), "t");
    for (long i = 0; i < k; ++i) c *= RatPoly(std::vector<Rational>{Rational(-i), Rational(1)}, "t");
    c = c * RatPoly::constant(Rational(1) / Rational(factorial(static_cast<unsigned long>(k))), "t");
    o.require(subdivision_operator(c) == RatPoly::monomial(Rational(1), static_cast<std::size_t>(k)),
              "C(t," + std::to_string(k) + ")");
  }
  const auto grid = interlacing_grid(6);
  for (const auto& spec : grid) {
    const auto coeffs = magic_basis_expansion(ehrhart_product(spec), spec.total());
    bool ok = true;
    for (const auto& c : coeffs) ok = ok && c >= 0;
    o.require(ok, spec_str(spec) + " has a negative magic coefficient");
  }
  o.note << "binomials k<=6; " << grid.size() << " specs";
  return o;
}

Outcome criterion12() {
  Outcome o;
  for (int n : {2, 3}) {
    const auto rep = verify_decomposition_remark(n);
    o.require(rep.a_matches && rep.b_matches, "n=" + std::to_string(n));
    o.note << "n=" << n << ": a=" << poly_str(rep.decomposition.a) << " b=" << poly_str(rep.decomposition.b)
           << "; ";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"dual construction equality (n<=3, m_i<=3, r_i<=3, m<=7)", criterion1},
      {"m=(3,3) polynomial, coefficient sum, degree and codegree", criterion2},
      {"symmetric decomposition examples", criterion3},
      {"symmetry criterion vs palindromicity (n<=3, m_i<=4, r_i<=4, m<=8)", criterion4},
      {"self-interlacing conditions (strict) and consequences for r_j>=m_j+1, m<=6", criterion5},
      {"identity suite to truncation 4; equidistribution; flag r-independence", criterion6},
      {"lattice counts vs Ehrhart product; interior point at the codegree", criterion7},
      {"s-Eulerian equalities", criterion8},
      {"not-s-Eulerian search and positive control", criterion9},
      {"tree gamma interpretation and G/H partition", criterion10},
      {"subdivision operator and magic positivity", criterion11},
      {"decomposition identification for n in {2,3}", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    failed += !o.pass;
    std::printf("[%s] criterion %zu: %s -- %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
