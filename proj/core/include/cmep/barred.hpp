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

#ifndef CMEP_BARRED_HPP
#define CMEP_BARRED_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cmep/combinatorics.hpp"
#include "cmep/series.hpp"

namespace cmep {

// barred: at least one bar in every descent space.
// ascent: at least one bar in every ascent space.
// flag: constant r; space j in [m] holds a_j mod r bars, descent spaces
// with a_j = 0 hold at least r; space 0 is free.
enum class BarMode { barred, ascent, flag };

enum class WeightScheme { thm1, thm2, ascent, flag };

std::string to_string(BarMode mode);
std::string to_string(WeightScheme scheme);

struct BarredPermutation {
  ColoredPermutation base;
  BarMode mode = BarMode::barred;
  // bars[s] = bars in space s, s = 0..m; space s sits before letter s+1 and
  // space m before the sentinel.
  std::vector<int> bars;

  int total_bars() const;
  // Bars as '|' interleaved with the letters, sentinel last.
  std::string to_string() const;
};

bool is_legal_placement(const ColoredPermutation& pi, BarMode mode,
                        const std::vector<int>& bars);

/// Every legal placement with at most max_bars bars, in lexicographic order of bars.
std::vector<BarredPermutation> enumerate_barred(const ColoredPermutation& pi, int max_bars,
                                                BarMode mode);

/// Variables of a weight scheme, with per-variable truncation caps.
struct VariableLayout {
  WeightScheme scheme = WeightScheme::thm1;
  std::vector<std::string> names;
  std::vector<int> caps;
  std::size_t truncation_var = 0;

  std::size_t size() const { return names.size(); }
  Exponent zero() const { return Exponent(names.size(), 0); }
  std::size_t index(const std::string& name) const;
};

/**
 * thm1, ascent: z_1..z_n then z_{m+1}.
 * thm2: y_1..y_r, z_{k^l} for k in [n], l in [r_k], then z_{m+1}.
 * flag: z_0 then z_1..z_n.
 * The truncation variable (z_{m+1}, or z_0 for flag) is capped at
 * truncation_cap and every other variable at variable_cap.
 */
VariableLayout weight_layout(WeightScheme scheme, const MultisetSpec& spec,
                             int truncation_cap, int variable_cap);

Exponent weight(const BarredPermutation& sigma, const VariableLayout& layout);

/// Expansion of sum_{sigma on pi} wt(sigma) from its closed rational form.
TruncatedSeries closed_form_term(const ColoredPermutation& pi, const VariableLayout& layout);

}  // namespace cmep

#endif  // CMEP_BARRED_HPP
