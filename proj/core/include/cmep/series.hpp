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

#ifndef CMEP_SERIES_HPP
#define CMEP_SERIES_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cmep/integer.hpp"

namespace cmep {

using Exponent = std::vector<int>;

/**
 * Sparse multivariate power series truncated at per-variable degree caps.
 *
 * Terms beyond a cap are discarded on insertion, so the class models the
 * quotient ring Z[v_1..v_k] / (v_i^{cap_i + 1}) and every product is exact
 * there.
 */
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<int> caps);

  static TruncatedSeries one(std::vector<int> caps);
  static TruncatedSeries monomial(std::vector<int> caps, const Exponent& exp,
                                  const Integer& coeff = Integer(1));

  const std::vector<int>& caps() const { return caps_; }
  std::size_t num_vars() const { return caps_.size(); }
  bool within_caps(const Exponent& exp) const;

  // Adds coeff * v^exp; silently dropped when exp exceeds a cap.
  void add_term(const Exponent& exp, const Integer& coeff);
  Integer coefficient(const Exponent& exp) const;

  const std::map<Exponent, Integer>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  TruncatedSeries& multiply_monomial(const Exponent& exp);

  // Multiplies by 1/(1 - v^u). u must have a positive exponent at
  // truncation_var; otherwise the geometric series is not finite under the caps.
  TruncatedSeries& divide_one_minus(const Exponent& u, std::size_t truncation_var);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.caps_ == b.caps_ && a.terms_ == b.terms_;
  }

  // Smallest exponent (lexicographic) whose coefficients differ.
  std::optional<Exponent> first_difference(const TruncatedSeries& other) const;

 private:
  void require_same_caps(const TruncatedSeries& other) const;

  std::vector<int> caps_;
  std::map<Exponent, Integer> terms_;
};

}  // namespace cmep

#endif  // CMEP_SERIES_HPP
