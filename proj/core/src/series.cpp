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

#include "cmep/series.hpp"

#include <stdexcept>
#include <utility>

namespace cmep {

TruncatedSeries::TruncatedSeries(std::vector<int> caps) : caps_(std::move(caps)) {
  for (int c : caps_)
    if (c < 0) throw std::invalid_argument("truncation caps must be nonnegative");
}

TruncatedSeries TruncatedSeries::one(std::vector<int> caps) {
  TruncatedSeries s(std::move(caps));
  s.add_term(Exponent(s.num_vars(), 0), Integer(1));
  return s;
}

TruncatedSeries TruncatedSeries::monomial(std::vector<int> caps, const Exponent& exp,
                                          const Integer& coeff) {
  TruncatedSeries s(std::move(caps));
  s.add_term(exp, coeff);
  return s;
}

bool TruncatedSeries::within_caps(const Exponent& exp) const {
  if (exp.size() != caps_.size())
    throw std::invalid_argument("exponent length does not match variable count");
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] < 0 || exp[i] > caps_[i]) return false;
  return true;
}

void TruncatedSeries::add_term(const Exponent& exp, const Integer& coeff) {
  if (coeff == 0 || !within_caps(exp)) return;
  auto [it, inserted] = terms_.try_emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer TruncatedSeries::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Integer(0) : it->second;
}

void TruncatedSeries::require_same_caps(const TruncatedSeries& other) const {
  if (caps_ != other.caps_) throw std::invalid_argument("series caps differ");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_caps(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_caps(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_same_caps(b);
  TruncatedSeries out(a.caps_);
  Exponent e(a.caps_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      bool ok = true;
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] > a.caps_[i]) {
          ok = false;
          break;
        }
      }
      if (ok) out.add_term(e, ca * cb);
    }
  }
  return out;
}

TruncatedSeries& TruncatedSeries::multiply_monomial(const Exponent& exp) {
  if (exp.size() != caps_.size())
    throw std::invalid_argument("exponent length does not match variable count");
  std::map<Exponent, Integer> shifted;
  for (auto& [e, c] : terms_) {
    Exponent n = e;
    bool ok = true;
    for (std::size_t i = 0; i < n.size(); ++i) {
      n[i] += exp[i];
      if (n[i] > caps_[i]) {
        ok = false;
        break;
      }
    }
    if (ok) shifted.emplace_hint(shifted.end(), std::move(n), std::move(c));
  }
  terms_ = std::move(shifted);
  return *this;
}

TruncatedSeries& TruncatedSeries::divide_one_minus(const Exponent& u,
                                                   std::size_t truncation_var) {
  if (truncation_var >= caps_.size() || u.size() != caps_.size() ||
      u[truncation_var] <= 0)
    throw std::invalid_argument(
        "geometric expansion needs a positive power of the truncation variable");
  TruncatedSeries power = *this;
  while (true) {
    power.multiply_monomial(u);
    if (power.is_zero()) break;
    *this += power;
  }
  return *this;
}

std::optional<Exponent> TruncatedSeries::first_difference(
    const TruncatedSeries& other) const {
  require_same_caps(other);
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first))
      return a->first;
    if (a == terms_.end() || b->first < a->first) return b->first;
    if (a->second != b->second) return a->first;
    ++a;
    ++b;
  }
  return std::nullopt;
}

}  // namespace cmep
