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

#ifndef CMEP_POLYNOMIAL_HPP
#define CMEP_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cmep/integer.hpp"

namespace cmep {

/**
 * Dense univariate polynomial, coefficient i multiplies var^i.
 *
 * The coefficient vector never has a trailing zero; the zero polynomial is
 * the empty vector and has degree -1.
 */
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Coeff> coeffs, std::string var = "x")
      : coeffs_(std::move(coeffs)), var_(std::move(var)) {
    trim();
  }

  Polynomial(std::initializer_list<long> coeffs, std::string var = "x")
      : var_(std::move(var)) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static Polynomial constant(const Coeff& c, std::string var = "x") {
    return Polynomial(std::vector<Coeff>{c}, std::move(var));
  }

  static Polynomial monomial(const Coeff& c, std::size_t power,
                             std::string var = "x") {
    std::vector<Coeff> v(power + 1);
    v[power] = c;
    return Polynomial(std::move(v), std::move(var));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Coeff coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Coeff(0);
  }
  const Coeff& leading() const { return coeffs_.back(); }
  std::span<const Coeff> coefficients() const { return coeffs_; }

  // Coefficients padded with zeros to exactly `length` entries.
  std::vector<Coeff> padded(std::size_t length) const {
    std::vector<Coeff> v(coeffs_.begin(), coeffs_.end());
    if (v.size() < length) v.resize(length);
    return v;
  }

  const std::string& var() const { return var_; }
  Polynomial with_var(std::string var) const {
    Polynomial p = *this;
    p.var_ = std::move(var);
    return p;
  }

  void set_coeff(std::size_t i, const Coeff& c) {
    if (i >= coeffs_.size()) coeffs_.resize(i + 1);
    coeffs_[i] = c;
    trim();
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  Polynomial& operator*=(const Coeff& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.coeffs_) v = -v;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }
  friend Polynomial operator*(const Coeff& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial({}, a.var_);
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out), a.var_);
  }

  // Coefficient equality; the display label is ignored.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  template <class T>
  T evaluate(const T& at) const {
    T acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = T(acc * at + T(coeffs_[i]));
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial({}, var_);
    std::vector<Coeff> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      out[i - 1] = coeffs_[i] * Coeff(static_cast<unsigned long>(i));
    return Polynomial(std::move(out), var_);
  }

  // p(inner(x)) by Horner's rule.
  Polynomial compose(const Polynomial& inner) const {
    Polynomial acc({}, var_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      acc = acc * inner;
      acc += Polynomial::constant(coeffs_[i], var_);
    }
    return acc;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = Polynomial::constant(Coeff(1), var_);
    for (unsigned i = 0; i < e; ++i) result = result * *this;
    return result;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
  std::string var_ = "x";
};

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return RatPoly(std::move(v), p.var());
}

// Nullopt when some coefficient is not an integer.
inline std::optional<IntPoly> to_integer(const RatPoly& p) {
  std::vector<Integer> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    if (c.get_den() != 1) return std::nullopt;
    v.emplace_back(c.get_num());
  }
  return IntPoly(std::move(v), p.var());
}

inline IntPoly one_plus_x_pow(unsigned e, std::string var = "x") {
  return IntPoly({1, 1}, std::move(var)).pow(e);
}

}  // namespace cmep

#endif  // CMEP_POLYNOMIAL_HPP
