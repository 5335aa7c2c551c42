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

#include "cmep/real_roots.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "cmep/poly_ops.hpp"

namespace cmep {

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  RatPoly d = p.derivative();
  while (!d.is_zero()) {
    chain.push_back(d);
    RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    d = -r;
  }
  return chain;
}


RatPoly square_free_part(const RatPoly& p) {
  if (p.degree() <= 0) return p;
  return monic(exact_quotient(p, gcd(p, p.derivative())));
}

std::vector<RatPoly> square_free_factorization(const RatPoly& p) {
  std::vector<RatPoly> factors;
  if (p.degree() <= 0) return factors;
  RatPoly a = gcd(p, p.derivative());
  RatPoly b = exact_quotient(p, a);
  RatPoly c = exact_quotient(p.derivative(), a);
  RatPoly d = c - b.derivative();
  while (b.degree() > 0) {
    RatPoly ai = gcd(b, d);
    b = exact_quotient(b, ai);
    c = exact_quotient(d, ai);
    d = c - b.derivative();
    factors.push_back(monic(ai));
  }
  return factors;
}

namespace {

// A Sturm chain with each member scaled by a positive constant to integer
// coefficients. Signs at any point are unchanged, and evaluation at p/q
// (q > 0) only needs integer arithmetic on sum c_i p^i q^(d-i).
using IntChain = std::vector<std::vector<Integer>>;

IntChain integer_chain(const std::vector<RatPoly>& chain) {
  IntChain out;
  out.reserve(chain.size());
  for (const auto& f : chain) {
    Integer den = 1;
    for (const auto& c : f.coefficients()) den = lcm(den, Integer(c.get_den()));
    std::vector<Integer> row;
    row.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients()) row.push_back(Integer(c.get_num() * (den / c.get_den())));
    out.push_back(std::move(row));
  }
  return out;
}

void make_primitive(std::vector<Integer>& f) {
  Integer g = 0;
  for (const auto& c : f) g = gcd(g, c);
  if (g > 1)
    for (auto& c : f) c /= g;
}

// Remainder of f by g up to a positive factor, via leading-term elimination.
std::vector<Integer> positive_remainder(std::vector<Integer> f, const std::vector<Integer>& g) {
  const Integer lead_g = abs(g.back());
  const int sign_g = sgn(g.back());
  while (f.size() >= g.size()) {
    if (f.back() == 0) {
      f.pop_back();
      continue;
    }
    const Integer lead_f = f.back();
    const std::size_t shift = f.size() - g.size();
    for (auto& c : f) c *= lead_g;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (sign_g > 0)
        f[shift + i] -= lead_f * g[i];
      else
        f[shift + i] += lead_f * g[i];
    }
    f.pop_back();
    make_primitive(f);
  }
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

// Sturm chain computed over the integers, each member primitive and
// differing from the rational chain by a positive factor.
IntChain integer_sturm_chain(const RatPoly& p) {
  IntChain chain;
  if (p.is_zero()) return chain;
  auto f = integer_chain({p}).front();
  make_primitive(f);
  chain.push_back(f);
  std::vector<Integer> d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
  make_primitive(d);
  while (!d.empty()) {
    chain.push_back(d);
    auto r = positive_remainder(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    d = std::move(r);
  }
  return chain;
}

// Distinct real roots of the chain's first member, from the signs at -inf and +inf.
int distinct_real_roots(const IntChain& chain) {
  int at_neg = 0, at_pos = 0, last_neg = 0, last_pos = 0;
  for (const auto& f : chain) {
    const int s = sgn(f.back());
    const int s_neg = (f.size() % 2 == 1) ? s : -s;
    if (last_pos != 0 && s != last_pos) ++at_pos;
    if (last_neg != 0 && s_neg != last_neg) ++at_neg;
    last_pos = s;
    last_neg = s_neg;
  }
  return at_neg - at_pos;
}

int sign_variations(const IntChain& chain, const Rational& at) {
  const Integer& num = at.get_num();
  const Integer& den = at.get_den();
  std::size_t max_deg = 0;
  for (const auto& f : chain) max_deg = std::max(max_deg, f.size());
  std::vector<Integer> den_pow(max_deg + 1);
  den_pow[0] = 1;
  for (std::size_t i = 1; i < den_pow.size(); ++i) den_pow[i] = den_pow[i - 1] * den;

  int variations = 0;
  int last = 0;
  Integer acc;
  for (const auto& f : chain) {
    if (f.empty()) continue;
    const std::size_t d = f.size() - 1;
    acc = f[d];
    for (std::size_t i = d; i-- > 0;) acc = acc * num + f[i] * den_pow[d - i];
    const int s = sgn(acc);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

// Integer bound (a power of two) on the absolute value of every root, so bisection stays dyadic.
Rational cauchy_bound(const RatPoly& p) {
  Rational best = 0;
  const Rational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(i)) / lead;
    if (r > best) best = r;
  }
  best += 2;
  Integer bound = 1;
  while (bound < best) bound *= 2;
  return Rational(bound);
}

int roots_between(const IntChain& chain, const RootInterval& iv) {
  return sign_variations(chain, iv.lo) - sign_variations(chain, iv.hi);
}

struct WorkInterval {
  Rational lo, hi;
  int v_lo, v_hi;
};

}  // namespace

std::vector<RootInterval> isolate_real_roots(const RatPoly& square_free) {
  std::vector<RootInterval> out;
  if (square_free.degree() <= 0) return out;
  const auto chain = integer_sturm_chain(square_free);
  const Rational bound = cauchy_bound(square_free);
  std::vector<WorkInterval> work{{-bound, bound, sign_variations(chain, -bound), sign_variations(chain, bound)}};
  while (!work.empty()) {
    WorkInterval iv = work.back();
    work.pop_back();
    const int count = iv.v_lo - iv.v_hi;
    if (count == 0) continue;
    if (count == 1) {
      out.push_back({iv.lo, iv.hi});
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    while (square_free.evaluate(mid) == 0) mid = (iv.lo + mid) / 2;
    const int v_mid = sign_variations(chain, mid);
    work.push_back({iv.lo, mid, iv.v_lo, v_mid});
    work.push_back({mid, iv.hi, v_mid, iv.v_hi});
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

namespace {

// Multiplicity, as a root of p, of the unique root of a square-free multiple inside iv.
int multiplicity_in(const std::vector<IntChain>& factor_chains, const RootInterval& iv) {
  for (std::size_t i = 0; i < factor_chains.size(); ++i)
    if (!factor_chains[i].empty() && roots_between(factor_chains[i], iv) > 0)
      return static_cast<int>(i) + 1;
  return 0;
}

std::vector<IntChain> factor_chains(const RatPoly& p) {
  std::vector<IntChain> chains;
  for (const auto& f : square_free_factorization(p)) chains.push_back(integer_sturm_chain(f));
  return chains;
}

}  // namespace

int sign_variations(const std::vector<RatPoly>& chain, const Rational& at) {
  return sign_variations(integer_chain(chain), at);
}

bool is_real_rooted(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("is_real_rooted: zero polynomial");
  const RatPoly q = square_free_part(p);
  return distinct_real_roots(integer_sturm_chain(q)) == std::max(q.degree(), 0);
}

bool is_real_rooted(const IntPoly& p) { return is_real_rooted(to_rational(p)); }

RootCertificate real_root_certificate(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("real_root_certificate: zero polynomial");
  RootCertificate cert;
  cert.degree = p.degree();
  cert.square_free_part = square_free_part(p);
  cert.intervals = isolate_real_roots(cert.square_free_part);
  const auto chains = factor_chains(p);
  for (const auto& iv : cert.intervals) {
    int mult = multiplicity_in(chains, iv);
    if (mult == 0) throw std::logic_error("real_root_certificate: root without a factor");
    cert.multiplicities.push_back(mult);
    cert.real_root_count += mult;
  }
  cert.real_rooted = cert.real_root_count == cert.degree;
  return cert;
}

RootCertificate real_root_certificate(const IntPoly& p) {
  return real_root_certificate(to_rational(p));
}

InterlacingResult interlaces(const RatPoly& q, const RatPoly& p, bool strict) {
  if (q.is_zero() || p.is_zero()) {
    if (strict) return {false, "zero polynomial never interlaces strictly"};
    const RatPoly& other = q.is_zero() ? p : q;
    if (!other.is_zero() && !is_real_rooted(other))
      return {false, "not real-rooted"};
    return {true, "zero polynomial"};
  }
  if (!is_real_rooted(q)) return {false, "q is not real-rooted"};
  if (!is_real_rooted(p)) return {false, "p is not real-rooted"};
  const int dp = p.degree();
  const int dq = q.degree();
  if (dq != dp && dq != dp - 1) return {false, "degrees do not allow interlacing"};

  // Isolate the union of both root sets once so equal roots are detected exactly.
  const auto joint = isolate_real_roots(square_free_part(p * q));
  const auto p_chains = factor_chains(p);
  const auto q_chains = factor_chains(q);
  std::vector<int> alpha, beta;  // ranks of roots, descending
  for (int i = static_cast<int>(joint.size()) - 1; i >= 0; --i) {
    alpha.insert(alpha.end(), multiplicity_in(p_chains, joint[i]), i);
    beta.insert(beta.end(), multiplicity_in(q_chains, joint[i]), i);
  }
  auto ge = [strict](int a, int b) { return strict ? a > b : a >= b; };
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (!ge(alpha[i], beta[i]))
      return {false, "alpha_" + std::to_string(i + 1) + " vs beta_" + std::to_string(i + 1)};
    if (i + 1 < alpha.size() && !ge(beta[i], alpha[i + 1]))
      return {false, "beta_" + std::to_string(i + 1) + " vs alpha_" + std::to_string(i + 2)};
  }
  return {true, "roots interlace"};
}

InterlacingResult interlaces(const IntPoly& q, const IntPoly& p, bool strict) {
  return interlaces(to_rational(q), to_rational(p), strict);
}

}  // namespace cmep
