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

#ifndef CMEP_COMBINATORICS_HPP
#define CMEP_COMBINATORICS_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cmep/errors.hpp"
#include "cmep/integer.hpp"

namespace cmep {

/// Multiset {1^{m_1}, ..., n^{m_n}} where value k may take colors 1..r_k.
class MultisetSpec {
 public:
  MultisetSpec() = default;
  MultisetSpec(std::vector<int> m, std::vector<int> r);

  // Same multiplicity list with every value given the same color count.
  static MultisetSpec uniform(std::vector<int> m, int color);

  const std::vector<int>& m() const { return m_; }
  const std::vector<int>& r() const { return r_; }
  int n() const { return static_cast<int>(m_.size()); }
  int total() const { return total_; }
  int multiplicity(int value) const { return m_[value - 1]; }
  int colors(int value) const { return r_[value - 1]; }
  int max_color() const;
  // The common color count when all r_k agree.
  std::optional<int> constant_color() const;

  // multinomial(m) * prod r_k^{m_k}.
  Integer permutation_count() const;

  friend bool operator==(const MultisetSpec&, const MultisetSpec&) = default;

 private:
  std::vector<int> m_;
  std::vector<int> r_;
  int total_ = 0;
};

struct ColoredLetter {
  int value = 0;
  int color = 1;

  friend bool operator==(const ColoredLetter&, const ColoredLetter&) = default;
};

// Color is the primary key and value the secondary one, so the sentinel
// (n+1)^1 sits above every color-1 letter and below 1^2.
constexpr std::strong_ordering compare_colored(ColoredLetter a, ColoredLetter b) {
  if (auto c = a.color <=> b.color; c != 0) return c;
  return a.value <=> b.value;
}

inline std::string to_string(ColoredLetter l) {
  return std::to_string(l.value) + "^" + std::to_string(l.color);
}

class ColoredPermutation {
 public:
  // Validates multiplicities and color bounds against spec.
  ColoredPermutation(MultisetSpec spec, std::vector<ColoredLetter> letters);

  // Space-separated tokens "value^color".
  static ColoredPermutation parse(const MultisetSpec& spec, std::string_view text);

  const MultisetSpec& spec() const { return spec_; }
  std::span<const ColoredLetter> letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  ColoredLetter sentinel() const { return {spec_.n() + 1, 1}; }
  // 1-based; position m+1 is the sentinel.
  ColoredLetter at(int position) const;
  std::string to_string() const;

  friend bool operator==(const ColoredPermutation& a, const ColoredPermutation& b) {
    return a.spec_ == b.spec_ && a.letters_ == b.letters_;
  }

 private:
  MultisetSpec spec_;
  std::vector<ColoredLetter> letters_;
};

// Positions j in [m] with letter_j > letter_{j+1}, the sentinel closing the word.
std::vector<int> descent_positions(std::span<const ColoredLetter> word, int n);
// Positions j in [m] with letter_j < letter_{j+1}. Equal neighbours are neither.
std::vector<int> ascent_positions(std::span<const ColoredLetter> word, int n);

struct StatisticBundle {
  std::vector<int> des_set;
  std::vector<int> asc_set;
  int des = 0;
  int asc = 0;
  long dmaj = 0;
  long amaj = 0;
  std::optional<long> fdmaj;
  std::optional<long> famaj;
  // color_counts[j-1] = number of letters of color j, j = 1..max color.
  std::vector<int> color_counts;
  // a_j = (c_j - c_{j+1}) mod r with c_{m+1} = 1, r the largest color count.
  std::vector<int> color_changes;
};

// flag_scale requests fdmaj/famaj; every r_k must equal it.
StatisticBundle statistics(const ColoredPermutation& pi,
                           std::optional<int> flag_scale = std::nullopt);

/// A word read backwards with the sentinel moved to the front (position 0).
class ReversedPermutation {
 public:
  explicit ReversedPermutation(const ColoredPermutation& pi);

  const MultisetSpec& spec() const { return spec_; }
  std::span<const ColoredLetter> letters() const { return letters_; }
  // Positions j in {0..m-1} comparing letter j with letter j+1 (letter 0 is the sentinel).
  std::vector<int> descent_positions() const;
  std::vector<int> ascent_positions() const;

 private:
  ColoredLetter letter(int j) const;

  MultisetSpec spec_;
  std::vector<ColoredLetter> letters_;
};

ReversedPermutation reverse(const ColoredPermutation& pi);
ColoredPermutation reverse(const ReversedPermutation& pi);

void check_capacity(const Integer& count, std::uint64_t cap, const std::string& what);

/**
 * Visits every colored permutation of spec as a span of letters, in
 * lexicographic order of (value word, color word).
 *
 * Throws CapacityError before visiting anything when the stream is longer
 * than cap.
 */
template <class Visitor>
void for_each_colored_word(const MultisetSpec& spec, Visitor&& visit,
                           std::uint64_t cap = kDefaultEnumerationCap) {
  check_capacity(spec.permutation_count(), cap, "colored permutations");
  std::vector<int> values;
  for (int k = 1; k <= spec.n(); ++k) values.insert(values.end(), spec.multiplicity(k), k);
  const std::size_t len = values.size();
  std::vector<ColoredLetter> word(len);
  do {
    for (std::size_t i = 0; i < len; ++i) word[i] = {values[i], 1};
    while (true) {
      visit(std::span<const ColoredLetter>(word));
      std::size_t i = len;
      while (i > 0 && word[i - 1].color == spec.colors(word[i - 1].value)) {
        word[i - 1].color = 1;
        --i;
      }
      if (i == 0) break;
      ++word[i - 1].color;
    }
  } while (std::next_permutation(values.begin(), values.end()));
}

std::vector<ColoredPermutation> enumerate_colored_permutations(
    const MultisetSpec& spec, std::uint64_t cap = kDefaultEnumerationCap);

// All ordered words of a multiset of positive integers, lexicographically.
std::vector<std::vector<int>> multiset_words(std::vector<int> labels,
                                             std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace cmep

#endif  // CMEP_COMBINATORICS_HPP
