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

#include "cmep/barred.hpp"

#include <algorithm>
#include <stdexcept>

#include "cmep/errors.hpp"

namespace cmep {

std::string to_string(BarMode mode) {
  switch (mode) {
    case BarMode::barred: return "barred";
    case BarMode::ascent: return "ascent";
    case BarMode::flag: return "flag";
  }
  return "?";
}

std::string to_string(WeightScheme scheme) {
  switch (scheme) {
    case WeightScheme::thm1: return "thm1";
    case WeightScheme::thm2: return "thm2";
    case WeightScheme::ascent: return "ascent";
    case WeightScheme::flag: return "flag";
  }
  return "?";
}

int BarredPermutation::total_bars() const {
  int t = 0;
  for (int b : bars) t += b;
  return t;
}

std::string BarredPermutation::to_string() const {
  std::string out;
  for (int s = 0; s <= base.size(); ++s) {
    out.append(static_cast<std::size_t>(bars[s]), '|');
    out += cmep::to_string(base.at(s + 1));
  }
  return out;
}

namespace {

BarMode mode_of(WeightScheme scheme) {
  switch (scheme) {
    case WeightScheme::thm1:
    case WeightScheme::thm2: return BarMode::barred;
    case WeightScheme::ascent: return BarMode::ascent;
    case WeightScheme::flag: return BarMode::flag;
  }
  return BarMode::barred;
}

struct SpaceRule {
  int min = 0;
  int step = 1;
};

// Minimum bar count and period of each space s = 0..m.
std::vector<SpaceRule> space_rules(const ColoredPermutation& pi, BarMode mode) {
  const int m = pi.size();
  std::vector<SpaceRule> rules(static_cast<std::size_t>(m) + 1);
  const auto des = descent_positions(pi.letters(), pi.spec().n());
  auto is_des = [&](int j) { return std::binary_search(des.begin(), des.end(), j); };
  switch (mode) {
    case BarMode::barred:
      for (int j : des) rules[j].min = 1;
      break;
    case BarMode::ascent:
      for (int j : ascent_positions(pi.letters(), pi.spec().n())) rules[j].min = 1;
      break;
    case BarMode::flag: {
      auto r = pi.spec().constant_color();
      if (!r) throw IncompatibleInput("flag bars need a constant color count");
      const auto stats = statistics(pi);
      for (int j = 1; j <= m; ++j) {
        const int a = stats.color_changes[j - 1];
        rules[j].step = *r;
        rules[j].min = (a == 0 && is_des(j)) ? *r : a;
      }
      break;
    }
  }
  return rules;
}

// Exponent of the bar-free placement and of one extra bar per space.
struct WeightRule {
  Exponent base;
  std::vector<Exponent> unit;
};

WeightRule weight_rule(const ColoredPermutation& pi, const VariableLayout& layout) {
  const MultisetSpec& spec = pi.spec();
  const int m = pi.size();
  const int n = spec.n();
  WeightRule w{layout.zero(), std::vector<Exponent>(static_cast<std::size_t>(m) + 1, layout.zero())};
  auto letters = pi.letters();
  switch (layout.scheme) {
    case WeightScheme::thm1:
    case WeightScheme::ascent: {
      const bool asc = layout.scheme == WeightScheme::ascent;
      for (const auto& l : letters)
        w.base[l.value - 1] += asc ? spec.colors(l.value) - l.color : l.color - 1;
      for (int s = 0; s <= m; ++s) {
        Exponent& u = w.unit[s];
        for (int j = s; j < m; ++j) u[letters[j].value - 1] += spec.colors(letters[j].value);
        u[n] += 1;
      }
      break;
    }
    case WeightScheme::thm2: {
      const int r = spec.max_color();
      std::vector<int> offset(static_cast<std::size_t>(n) + 1, r);
      for (int k = 1; k < n; ++k) offset[k] = offset[k - 1] + spec.colors(k);
      auto z_index = [&](ColoredLetter l) { return offset[l.value - 1] + l.color - 1; };
      for (const auto& l : letters) w.base[l.color - 1] += 1;
      for (int s = 0; s <= m; ++s) {
        Exponent& u = w.unit[s];
        for (int j = s; j < m; ++j) u[z_index(letters[j])] += spec.colors(letters[j].value);
        u.back() += 1;
      }
      break;
    }
    case WeightScheme::flag: {
      w.unit[0][0] = 1;
      for (int s = 1; s <= m; ++s) {
        Exponent& u = w.unit[s];
        u = w.unit[s - 1];
        u[letters[s - 1].value] += 1;
      }
      break;
    }
  }
  return w;
}

void add_scaled(Exponent& acc, const Exponent& e, int times) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += times * e[i];
}

}  // namespace

bool is_legal_placement(const ColoredPermutation& pi, BarMode mode,
                        const std::vector<int>& bars) {
  if (static_cast<int>(bars.size()) != pi.size() + 1) return false;
  const auto rules = space_rules(pi, mode);
  for (std::size_t s = 0; s < bars.size(); ++s) {
    if (bars[s] < rules[s].min) return false;
    if ((bars[s] - rules[s].min) % rules[s].step != 0) return false;
  }
  return true;
}

std::vector<BarredPermutation> enumerate_barred(const ColoredPermutation& pi, int max_bars,
                                                BarMode mode) {
  const auto rules = space_rules(pi, mode);
  std::vector<BarredPermutation> out;
  std::vector<int> bars(rules.size(), 0);
  // Depth-first over spaces, smallest legal count first.
  auto recurse = [&](auto&& self, std::size_t s, int budget) -> void {
    if (s == rules.size()) {
      out.push_back(BarredPermutation{pi, mode, bars});
      return;
    }
    for (int b = rules[s].min; b <= budget; b += rules[s].step) {
      bars[s] = b;
      self(self, s + 1, budget - b);
    }
    bars[s] = 0;
  };
  recurse(recurse, 0, max_bars);
  return out;
}

std::size_t VariableLayout::index(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::out_of_range("no variable named " + name);
  return static_cast<std::size_t>(it - names.begin());
}

VariableLayout weight_layout(WeightScheme scheme, const MultisetSpec& spec,
                             int truncation_cap, int variable_cap) {
  VariableLayout layout;
  layout.scheme = scheme;
  const std::string sentinel_var = "z_" + std::to_string(spec.total() + 1);
  switch (scheme) {
    case WeightScheme::thm1:
    case WeightScheme::ascent:
      for (int k = 1; k <= spec.n(); ++k) layout.names.push_back("z_" + std::to_string(k));
      layout.names.push_back(sentinel_var);
      break;
    case WeightScheme::thm2:
      for (int p = 1; p <= spec.max_color(); ++p) layout.names.push_back("y_" + std::to_string(p));
      for (int k = 1; k <= spec.n(); ++k)
        for (int l = 1; l <= spec.colors(k); ++l)
          layout.names.push_back("z_" + std::to_string(k) + "^" + std::to_string(l));
      layout.names.push_back(sentinel_var);
      break;
    case WeightScheme::flag:
      if (!spec.constant_color()) throw IncompatibleInput("flag weights need a constant color count");
      layout.names.push_back("z_0");
      for (int k = 1; k <= spec.n(); ++k) layout.names.push_back("z_" + std::to_string(k));
      break;
  }
  layout.truncation_var = scheme == WeightScheme::flag ? 0 : layout.names.size() - 1;
  layout.caps.assign(layout.names.size(), variable_cap);
  layout.caps[layout.truncation_var] = truncation_cap;
  return layout;
}

Exponent weight(const BarredPermutation& sigma, const VariableLayout& layout) {
  if (sigma.mode != mode_of(layout.scheme))
    throw IncompatibleInput("weight scheme " + to_string(layout.scheme) +
                            " does not apply to " + to_string(sigma.mode) + " placements");
  const WeightRule w = weight_rule(sigma.base, layout);
  Exponent e = w.base;
  for (std::size_t s = 0; s < sigma.bars.size(); ++s) add_scaled(e, w.unit[s], sigma.bars[s]);
  return e;
}

TruncatedSeries closed_form_term(const ColoredPermutation& pi, const VariableLayout& layout) {
  const auto rules = space_rules(pi, mode_of(layout.scheme));
  const WeightRule w = weight_rule(pi, layout);
  Exponent numerator = w.base;
  for (std::size_t s = 0; s < rules.size(); ++s) add_scaled(numerator, w.unit[s], rules[s].min);
  TruncatedSeries term = TruncatedSeries::monomial(layout.caps, numerator);
  for (std::size_t s = 0; s < rules.size() && !term.is_zero(); ++s) {
    Exponent u = layout.zero();
    add_scaled(u, w.unit[s], rules[s].step);
    term.divide_one_minus(u, layout.truncation_var);
  }
  return term;
}

}  // namespace cmep
