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

#ifndef CMEP_REAL_ROOTS_HPP
#define CMEP_REAL_ROOTS_HPP

#include <string>
#include <vector>

#include "cmep/polynomial.hpp"

namespace cmep {

// Open interval (lo, hi) with rational endpoints that are not roots.
struct RootInterval {
  Rational lo;
  Rational hi;
};

struct RootCertificate {
  RatPoly square_free_part;
  std::vector<RootInterval> intervals;  // ascending, one per distinct real root
  std::vector<int> multiplicities;      // parallel to intervals
  int real_root_count = 0;              // with multiplicity
  int degree = 0;
  bool real_rooted = false;
};

// Sturm chain q, q', -rem(q, q'), ...
std::vector<RatPoly> sturm_chain(const RatPoly& p);
int sign_variations(const std::vector<RatPoly>& chain, const Rational& at);

RatPoly square_free_part(const RatPoly& p);
// Yun's algorithm: factors[i] is the product of roots of multiplicity i + 1.
std::vector<RatPoly> square_free_factorization(const RatPoly& p);

// Distinct real roots of a square-free polynomial, isolated by Sturm bisection.
std::vector<RootInterval> isolate_real_roots(const RatPoly& square_free);

// Throws std::invalid_argument for the zero polynomial.
// Sturm count over the whole line; no isolation. Throws on the zero polynomial.
bool is_real_rooted(const RatPoly& p);
bool is_real_rooted(const IntPoly& p);

RootCertificate real_root_certificate(const RatPoly& p);
RootCertificate real_root_certificate(const IntPoly& p);

struct InterlacingResult {
  bool holds = false;
  std::string reason;
};

/**
 * q interlaces p: with alpha (roots of p) and beta (roots of q) both in
 * descending order and repeated by multiplicity,
 * alpha_1 >= beta_1 >= alpha_2 >= beta_2 >= ...; strict asks every
 * inequality to be strict. deg q must be deg p or deg p - 1. The zero
 * polynomial interlaces weakly in either slot but never strictly.
 */
InterlacingResult interlaces(const RatPoly& q, const RatPoly& p, bool strict);
InterlacingResult interlaces(const IntPoly& q, const IntPoly& p, bool strict);

}  // namespace cmep

#endif  // CMEP_REAL_ROOTS_HPP
