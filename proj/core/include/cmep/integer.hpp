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

#ifndef CMEP_INTEGER_HPP
#define CMEP_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cmep {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

// Canonical "p/q" form; integers print without a denominator.
inline std::string to_string(const Rational& v) { return v.get_str(); }

Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

// C(n, k) with C(n, 0) = 1 for every n and 0 whenever k < 0 or 0 <= n < k or n < 0 < k.
Integer binomial(long n, long k);
Integer factorial(unsigned long n);

// Generalised binomial C(x, k) evaluated at a rational point.
Rational binomial(const Rational& x, unsigned long k);

inline bool is_integral(const Rational& v) { return v.get_den() == 1; }

// mpq_class(n, d) leaves the fraction unreduced; this does not.
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace cmep

#endif  // CMEP_INTEGER_HPP
