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

#include "cmep/combinatorics.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace cmep {

MultisetSpec::MultisetSpec(std::vector<int> m, std::vector<int> r)
    : m_(std::move(m)), r_(std::move(r)) {
  if (m_.empty()) throw std::invalid_argument("multiset spec needs at least one value");
  if (m_.size() != r_.size())
    throw std::invalid_argument("m and r must have the same length");
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (m_[i] < 1) throw std::invalid_argument("multiplicities must be positive");
    if (r_[i] < 1) throw std::invalid_argument("color counts must be positive");
    total_ += m_[i];
  }
}

MultisetSpec MultisetSpec::uniform(std::vector<int> m, int color) {
  std::vector<int> r(m.size(), color);
  return MultisetSpec(std::move(m), std::move(r));
}

int MultisetSpec::max_color() const {
  int best = 0;
  for (int c : r_) best = std::max(best, c);
  return best;
}

std::optional<int> MultisetSpec::constant_color() const {
  for (int c : r_)
    if (c != r_.front()) return std::nullopt;
  return r_.front();
}

Integer MultisetSpec::permutation_count() const {
  Integer count = factorial(static_cast<unsigned long>(total_));
  for (std::size_t i = 0; i < m_.size(); ++i) {
    count /= factorial(static_cast<unsigned long>(m_[i]));
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(r_[i]),
                  static_cast<unsigned long>(m_[i]));
    count *= p;
  }
  return count;
}

ColoredPermutation::ColoredPermutation(MultisetSpec spec, std::vector<ColoredLetter> letters)
    : spec_(std::move(spec)), letters_(std::move(letters)) {
  std::vector<int> seen(spec_.n(), 0);
  for (const auto& l : letters_) {
    if (l.value < 1 || l.value > spec_.n())
      throw std::invalid_argument("letter value out of range: " + cmep::to_string(l));
    if (l.color < 1 || l.color > spec_.colors(l.value))
      throw std::invalid_argument("letter color out of range: " + cmep::to_string(l));
    ++seen[l.value - 1];
  }
  for (int k = 1; k <= spec_.n(); ++k)
    if (seen[k - 1] != spec_.multiplicity(k))
      throw std::invalid_argument("word does not use value " + std::to_string(k) +
                                  " exactly m_k times");
}

ColoredPermutation ColoredPermutation::parse(const MultisetSpec& spec, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<ColoredLetter> letters;
  std::string token;
  while (in >> token) {
    auto caret = token.find('^');
    if (caret == std::string::npos || caret == 0 || caret + 1 == token.size())
      throw std::invalid_argument("bad letter token: " + token);
    std::size_t used = 0;
    ColoredLetter l;
    l.value = std::stoi(token.substr(0, caret), &used);
    if (used != caret) throw std::invalid_argument("bad letter token: " + token);
    std::string color = token.substr(caret + 1);
    l.color = std::stoi(color, &used);
    if (used != color.size()) throw std::invalid_argument("bad letter token: " + token);
    letters.push_back(l);
  }
  return ColoredPermutation(spec, std::move(letters));
}

ColoredLetter ColoredPermutation::at(int position) const {
  if (position == size() + 1) return sentinel();
  if (position < 1 || position > size()) throw std::out_of_range("position out of range");
  return letters_[position - 1];
}

std::string ColoredPermutation::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += cmep::to_string(l);
  }
  return out;
}

namespace {

template <class Pred>
std::vector<int> positions_where(std::span<const ColoredLetter> word, int n, Pred pred) {
  std::vector<int> out;
  const ColoredLetter sentinel{n + 1, 1};
  for (std::size_t j = 0; j < word.size(); ++j) {
    const ColoredLetter next = j + 1 < word.size() ? word[j + 1] : sentinel;
    if (pred(compare_colored(word[j], next))) out.push_back(static_cast<int>(j) + 1);
  }
  return out;
}

}  // namespace

std::vector<int> descent_positions(std::span<const ColoredLetter> word, int n) {
  return positions_where(word, n, [](std::strong_ordering o) { return o > 0; });
}

std::vector<int> ascent_positions(std::span<const ColoredLetter> word, int n) {
  return positions_where(word, n, [](std::strong_ordering o) { return o < 0; });
}

StatisticBundle statistics(const ColoredPermutation& pi, std::optional<int> flag_scale) {
  const MultisetSpec& spec = pi.spec();
  const int m = pi.size();
  StatisticBundle s;
  s.des_set = descent_positions(pi.letters(), spec.n());
  s.asc_set = ascent_positions(pi.letters(), spec.n());
  s.des = static_cast<int>(s.des_set.size());
  s.asc = static_cast<int>(s.asc_set.size());
  for (int i : s.des_set) s.dmaj += m - i;
  for (int i : s.asc_set) s.amaj += m - i;

  const int r = spec.max_color();
  s.color_counts.assign(r, 0);
  for (const auto& l : pi.letters()) ++s.color_counts[l.color - 1];
  for (int j = 1; j <= m; ++j) {
    int diff = pi.at(j).color - pi.at(j + 1).color;
    s.color_changes.push_back(((diff % r) + r) % r);
  }

  if (flag_scale) {
    auto common = spec.constant_color();
    if (!common || *common != *flag_scale)
      throw UnsupportedStatistic("flag statistics need every r_k equal to the flag scale");
    long excess = 0;
    for (const auto& l : pi.letters()) excess += l.color - 1;
    s.fdmaj = static_cast<long>(*flag_scale) * s.dmaj + excess;
    long weighted = 0;
    for (int j = 1; j <= r; ++j) weighted += static_cast<long>(r - j) * s.color_counts[j - 1];
    s.famaj = static_cast<long>(*flag_scale) * s.amaj + weighted;
  }
  return s;
}

ReversedPermutation::ReversedPermutation(const ColoredPermutation& pi)
    : spec_(pi.spec()), letters_(pi.letters().rbegin(), pi.letters().rend()) {}

ColoredLetter ReversedPermutation::letter(int j) const {
  if (j == 0) return {spec_.n() + 1, 1};
  return letters_[j - 1];
}

std::vector<int> ReversedPermutation::descent_positions() const {
  std::vector<int> out;
  for (int j = 0; j < static_cast<int>(letters_.size()); ++j)
    if (compare_colored(letter(j), letter(j + 1)) > 0) out.push_back(j);
  return out;
}

std::vector<int> ReversedPermutation::ascent_positions() const {
  std::vector<int> out;
  for (int j = 0; j < static_cast<int>(letters_.size()); ++j)
    if (compare_colored(letter(j), letter(j + 1)) < 0) out.push_back(j);
  return out;
}

ReversedPermutation reverse(const ColoredPermutation& pi) { return ReversedPermutation(pi); }

ColoredPermutation reverse(const ReversedPermutation& pi) {
  std::vector<ColoredLetter> letters(pi.letters().rbegin(), pi.letters().rend());
  return ColoredPermutation(pi.spec(), std::move(letters));
}

void check_capacity(const Integer& count, std::uint64_t cap, const std::string& what) {
  if (count > Integer(std::to_string(cap)))
    throw CapacityError(what + ": " + to_string(count) + " elements exceed cap " +
                            std::to_string(cap),
                        cap);
}

std::vector<ColoredPermutation> enumerate_colored_permutations(const MultisetSpec& spec,
                                                               std::uint64_t cap) {
  std::vector<ColoredPermutation> out;
  for_each_colored_word(
      spec,
      [&](std::span<const ColoredLetter> w) {
        out.emplace_back(spec, std::vector<ColoredLetter>(w.begin(), w.end()));
      },
      cap);
  return out;
}

std::vector<std::vector<int>> multiset_words(std::vector<int> labels, std::uint64_t cap) {
  std::sort(labels.begin(), labels.end());
  std::vector<std::vector<int>> out;
  std::uint64_t count = 0;
  do {
    if (++count > cap) throw CapacityError("multiset words exceed cap", cap);
    out.push_back(labels);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

}  // namespace cmep
