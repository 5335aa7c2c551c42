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

#ifndef CMEP_IDENTITIES_HPP
#define CMEP_IDENTITIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmep/combinatorics.hpp"
#include "cmep/series.hpp"

namespace cmep {

enum class IdentityKind {
  classic,
  lin_a,
  lin_b,
  macmahon_mv,
  fdmaj,
  ascent_mv,
  equidistribution,
  second_mv,
  second_q,
  flag,
};

std::string to_string(IdentityKind kind);
IdentityKind parse_identity_kind(std::string_view name);
const std::vector<IdentityKind>& all_identity_kinds();

struct TruncationCaps {
  int truncation_degree = 4;  // T: degree of the designated truncation variable
  int variable_degree = 24;   // D: degree of every other variable
};

struct IdentityWitness {
  Exponent exponent;
  Integer lhs;
  Integer rhs;
};

struct IdentityReport {
  IdentityKind kind = IdentityKind::classic;
  MultisetSpec spec;
  TruncationCaps caps;
  std::vector<std::string> variables;
  bool match = false;
  std::optional<IdentityWitness> witness;  // present iff !match
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
};

struct IdentitySides {
  std::vector<std::string> variables;
  TruncatedSeries lhs;
  TruncatedSeries rhs;
};

/// Throws IncompatibleInput when the kind does not apply to spec.
void check_kind_applies(IdentityKind kind, const MultisetSpec& spec);

/**
 * Both sides of an identity as truncated series. The left side sums
 * per-permutation geometric expansions; the right side multiplies
 * (q-)binomials. EQUIDISTRIBUTION ignores the caps and compares the two
 * complete bivariate polynomials in (x, q).
 */
IdentitySides expand_identity(IdentityKind kind, const MultisetSpec& spec, TruncationCaps caps,
                              std::uint64_t cap = kDefaultEnumerationCap);

IdentityReport verify_identity(IdentityKind kind, const MultisetSpec& spec, TruncationCaps caps,
                               std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace cmep

#endif  // CMEP_IDENTITIES_HPP
