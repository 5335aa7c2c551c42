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

#include "cmep/identities.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "cmep/barred.hpp"
#include "cmep/errors.hpp"
#include "cmep/q_binomial.hpp"

namespace cmep {

namespace {

struct KindName {
  IdentityKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {IdentityKind::classic, "classic"},
    {IdentityKind::lin_a, "lin_a"},
    {IdentityKind::lin_b, "lin_b"},
    {IdentityKind::macmahon_mv, "macmahon_mv"},
    {IdentityKind::fdmaj, "fdmaj"},
    {IdentityKind::ascent_mv, "ascent_mv"},
    {IdentityKind::equidistribution, "equidistribution"},
    {IdentityKind::second_mv, "second_mv"},
    {IdentityKind::second_q, "second_q"},
    {IdentityKind::flag, "flag"},
};

bool all_colors_equal(const MultisetSpec& spec, int r) {
  auto c = spec.constant_color();
  return c && *c == r;
}

// Adds c * v^e to the series, e supplied as a single variable power.
TruncatedSeries embed(const IntPoly& p, const std::vector<int>& caps, std::size_t var,
                      int scale) {
  TruncatedSeries s(caps);
  Exponent e(caps.size(), 0);
  for (int i = 0; i <= p.degree(); ++i) {
    e[var] = i * scale;
    s.add_term(e, p.coeff(i));
  }
  return s;
}

TruncatedSeries power_of(const std::vector<int>& caps, std::size_t var, int exponent) {
  Exponent e(caps.size(), 0);
  e[var] = exponent;
  return TruncatedSeries::monomial(caps, e);
}

// Calls visit(i) for every i = (i_1..i_len) of nonnegative integers summing to total.
void for_each_composition(int len, int total,
                          const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> parts(static_cast<std::size_t>(len), 0);
  auto recurse = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == len - 1) {
      parts[pos] = remaining;
      visit(parts);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      parts[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  recurse(recurse, 0, total);
}

// The floor((1-l)/l) offset of the second identity.
int floor_offset(int l) { return l == 1 ? 0 : -1; }

IdentitySides univariate_sides(IdentityKind kind, const MultisetSpec& spec, TruncationCaps caps,
                               std::uint64_t cap) {
  const std::vector<int> vcaps{caps.truncation_degree};
  IdentitySides sides{{"x"}, TruncatedSeries(vcaps), TruncatedSeries(vcaps)};
  const int n = spec.n();
  for_each_colored_word(
      spec,
      [&](std::span<const ColoredLetter> w) {
        sides.lhs.add_term({static_cast<int>(descent_positions(w, n).size())}, Integer(1));
      },
      cap);
  for (int i = 0; i <= spec.total(); ++i) sides.lhs.divide_one_minus({1}, 0);

  for (int t = 0; t <= caps.truncation_degree; ++t) {
    Integer coeff = 1;
    for (int k = 1; k <= n; ++k) {
      const int mk = spec.multiplicity(k);
      if (kind == IdentityKind::classic) {
        coeff *= binomial(t + mk, mk);
      } else if (kind == IdentityKind::lin_b) {
        coeff *= binomial(2 * t + mk, mk);
      } else {
        Integer inner = 0;
        for (int i = 0; i <= mk; ++i) inner += binomial(t + mk - i, mk - i) * binomial(t + i - 1, i);
        coeff *= inner;
      }
    }
    sides.rhs.add_term({t}, coeff);
  }
  return sides;
}

// Variables (q, x): both fdmaj-type identities share the left side.
IdentitySides fdmaj_sides(IdentityKind kind, const MultisetSpec& spec, TruncationCaps caps,
                          std::uint64_t cap) {
  const int r = *spec.constant_color();
  const std::vector<int> vcaps{caps.variable_degree, caps.truncation_degree};
  IdentitySides sides{{"q", "x"}, TruncatedSeries(vcaps), TruncatedSeries(vcaps)};
  for_each_colored_word(
      spec,
      [&](std::span<const ColoredLetter> w) {
        ColoredPermutation pi(spec, std::vector<ColoredLetter>(w.begin(), w.end()));
        const auto s = statistics(pi, r);
        sides.lhs.add_term({static_cast<int>(*s.fdmaj), s.des}, Integer(1));
      },
      cap);
  for (int i = 0; i <= spec.total(); ++i) sides.lhs.divide_one_minus({r * i, 1}, 1);

  for (int t = 0; t <= caps.truncation_degree; ++t) {
    TruncatedSeries term = power_of(vcaps, 1, t);
    for (int k = 1; k <= spec.n() && !term.is_zero(); ++k) {
      const int mk = spec.multiplicity(k);
      if (kind == IdentityKind::fdmaj) {
        term = term * embed(q_binomial(r * t + mk, mk), vcaps, 0, 1);
        continue;
      }
      TruncatedSeries factor(vcaps);
      for_each_composition(r, mk, [&](const std::vector<int>& i) {
        TruncatedSeries prod = TruncatedSeries::one(vcaps);
        for (int p = 1; p <= r && !prod.is_zero(); ++p) {
          const int ip = i[p - 1];
          prod = prod * embed(q_binomial(t + floor_offset(p) + ip, ip), vcaps, 0, r);
          prod.multiply_monomial({(p - 1) * ip, 0});
        }
        factor += prod;
      });
      term = term * factor;
    }
    sides.rhs += term;
  }
  return sides;
}

IdentitySides equidistribution_sides(const MultisetSpec& spec, std::uint64_t cap) {
  const int r = *spec.constant_color();
  const int m = spec.total();
  const std::vector<int> vcaps{m, r * m * m + r * m};
  IdentitySides sides{{"x", "q"}, TruncatedSeries(vcaps), TruncatedSeries(vcaps)};
  for_each_colored_word(
      spec,
      [&](std::span<const ColoredLetter> w) {
        ColoredPermutation pi(spec, std::vector<ColoredLetter>(w.begin(), w.end()));
        const auto s = statistics(pi, r);
        sides.lhs.add_term({s.asc, static_cast<int>(*s.famaj)}, Integer(1));
        sides.rhs.add_term({s.des, static_cast<int>(*s.fdmaj)}, Integer(1));
      },
      cap);
  return sides;
}

IdentitySides multivariate_sides(IdentityKind kind, const MultisetSpec& spec,
                                 TruncationCaps caps, std::uint64_t cap) {
  WeightScheme scheme = WeightScheme::thm1;
  if (kind == IdentityKind::ascent_mv) scheme = WeightScheme::ascent;
  if (kind == IdentityKind::second_mv) scheme = WeightScheme::thm2;
  if (kind == IdentityKind::flag) scheme = WeightScheme::flag;
  const VariableLayout layout =
      weight_layout(scheme, spec, caps.truncation_degree, caps.variable_degree);
  const auto& vcaps = layout.caps;
  IdentitySides sides{layout.names, TruncatedSeries(vcaps), TruncatedSeries(vcaps)};

  for_each_colored_word(
      spec,
      [&](std::span<const ColoredLetter> w) {
        ColoredPermutation pi(spec, std::vector<ColoredLetter>(w.begin(), w.end()));
        sides.lhs += closed_form_term(pi, layout);
      },
      cap);

  const std::size_t tv = layout.truncation_var;
  for (int t = 0; t <= caps.truncation_degree; ++t) {
    TruncatedSeries term = power_of(vcaps, tv, t);
    for (int k = 1; k <= spec.n() && !term.is_zero(); ++k) {
      const int mk = spec.multiplicity(k);
      const int rk = spec.colors(k);
      switch (kind) {
        case IdentityKind::macmahon_mv:
          term = term * embed(q_binomial(rk * t + mk, mk), vcaps, k - 1, 1);
          break;
        case IdentityKind::ascent_mv:
          term = term * embed(q_binomial(rk * t + rk - 2 + mk, mk), vcaps, k - 1, 1);
          break;
        case IdentityKind::flag:
          term = term * embed(q_binomial(t + mk, mk), vcaps, k, 1);
          break;
        case IdentityKind::second_mv: {
          TruncatedSeries factor(vcaps);
          for_each_composition(rk, mk, [&](const std::vector<int>& i) {
            TruncatedSeries prod = TruncatedSeries::one(vcaps);
            for (int l = 1; l <= rk && !prod.is_zero(); ++l) {
              const int il = i[l - 1];
              const std::string zname = "z_" + std::to_string(k) + "^" + std::to_string(l);
              prod = prod * embed(q_binomial(t + floor_offset(l) + il, il), vcaps,
                                  layout.index(zname), rk);
              prod = prod * power_of(vcaps, layout.index("y_" + std::to_string(l)), il);
            }
            factor += prod;
          });
          term = term * factor;
          break;
        }
        default:
          throw std::logic_error("not a multivariate identity");
      }
    }
    sides.rhs += term;
  }
  return sides;
}

}  // namespace

std::string to_string(IdentityKind kind) {
  for (const auto& kn : kKindNames)
    if (kn.kind == kind) return kn.name;
  return "?";
}

IdentityKind parse_identity_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& kn : kKindNames)
    if (lower == kn.name) return kn.kind;
  throw std::invalid_argument("unknown identity kind: " + std::string(name));
}

const std::vector<IdentityKind>& all_identity_kinds() {
  static const std::vector<IdentityKind> kinds = [] {
    std::vector<IdentityKind> v;
    for (const auto& kn : kKindNames) v.push_back(kn.kind);
    return v;
  }();
  return kinds;
}

void check_kind_applies(IdentityKind kind, const MultisetSpec& spec) {
  switch (kind) {
    case IdentityKind::classic:
      if (!all_colors_equal(spec, 1)) throw IncompatibleInput("classic needs r = 1 for every value");
      break;
    case IdentityKind::lin_a:
    case IdentityKind::lin_b:
    case IdentityKind::equidistribution:
      if (!all_colors_equal(spec, 2))
        throw IncompatibleInput(to_string(kind) + " needs r = 2 for every value");
      break;
    case IdentityKind::fdmaj:
    case IdentityKind::second_q:
    case IdentityKind::flag:
      if (!spec.constant_color())
        throw IncompatibleInput(to_string(kind) + " needs a constant color count");
      break;
    default:
      break;
  }
}

IdentitySides expand_identity(IdentityKind kind, const MultisetSpec& spec, TruncationCaps caps,
                              std::uint64_t cap) {
  check_kind_applies(kind, spec);
  if (caps.truncation_degree < 0 || caps.variable_degree < 0)
    throw std::invalid_argument("truncation caps must be nonnegative");
  switch (kind) {
    case IdentityKind::classic:
    case IdentityKind::lin_a:
    case IdentityKind::lin_b:
      return univariate_sides(kind, spec, caps, cap);
    case IdentityKind::fdmaj:
    case IdentityKind::second_q:
      return fdmaj_sides(kind, spec, caps, cap);
    case IdentityKind::equidistribution:
      return equidistribution_sides(spec, cap);
    default:
      return multivariate_sides(kind, spec, caps, cap);
  }
}

IdentityReport verify_identity(IdentityKind kind, const MultisetSpec& spec, TruncationCaps caps,
                               std::uint64_t cap) {
  IdentitySides sides = expand_identity(kind, spec, caps, cap);
  IdentityReport report;
  report.kind = kind;
  report.spec = spec;
  report.caps = caps;
  report.variables = sides.variables;
  report.lhs_terms = sides.lhs.size();
  report.rhs_terms = sides.rhs.size();
  auto diff = sides.lhs.first_difference(sides.rhs);
  report.match = !diff.has_value();
  if (diff)
    report.witness = IdentityWitness{*diff, sides.lhs.coefficient(*diff), sides.rhs.coefficient(*diff)};
  return report;
}

}  // namespace cmep
