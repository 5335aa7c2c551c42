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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "cmep/barred.hpp"
#include "cmep/identities.hpp"
#include "oracles.hpp"

namespace cmep {
namespace {

std::set<std::string> placements(const ColoredPermutation& pi, int max_bars, BarMode mode) {
  std::set<std::string> out;
  for (const auto& b : enumerate_barred(pi, max_bars, mode)) out.insert(b.to_string());
  return out;
}

TEST(Barred, DescentSpacesNeedBars) {
  const MultisetSpec spec({2, 3}, {2, 2});
  const auto pi = ColoredPermutation::parse(spec, "1^2 2^1 2^2 2^2 1^1");
  const auto all = placements(pi, 6, BarMode::barred);
  EXPECT_TRUE(all.count("||1^2|2^12^2|2^2||1^13^1"));
  EXPECT_FALSE(all.count("||1^22^12^2|2^2||1^13^1"));
  EXPECT_FALSE(is_legal_placement(pi, BarMode::barred, {2, 0, 0, 1, 2, 0}));
  EXPECT_TRUE(is_legal_placement(pi, BarMode::barred, {2, 1, 0, 1, 2, 0}));
}

TEST(Barred, FlagConditions) {
  const MultisetSpec spec({3, 2}, {3, 3});
  const auto pi = ColoredPermutation::parse(spec, "1^1 1^2 2^2 2^1 1^3");
  const auto barred = placements(pi, 10, BarMode::barred);
  const auto flag = placements(pi, 10, BarMode::flag);
  EXPECT_TRUE(barred.count("|1^1||1^22^2|2^1||1^3||3^1"));
  EXPECT_FALSE(flag.count("|1^1||1^22^2|2^1||1^3||3^1"));
  EXPECT_TRUE(flag.count("|1^1||1^22^2|2^1||||1^3||3^1"));
}

TEST(Barred, AscentWordWithoutBars) {
  const MultisetSpec spec({1, 1, 1}, {1, 1, 1});
  const auto pi = ColoredPermutation::parse(spec, "1^1 2^1 3^1");
  EXPECT_EQ(enumerate_barred(pi, 0, BarMode::barred).size(), 1u);
}

TEST(Weight, FirstScheme) {
  const MultisetSpec spec({2, 3}, {2, 2});
  const auto pi = ColoredPermutation::parse(spec, "1^2 2^1 2^2 2^2 1^1");
  const BarredPermutation sigma{pi, BarMode::barred, {2, 1, 0, 1, 2, 0}};
  const auto layout = weight_layout(WeightScheme::thm1, spec, 10, 40);
  const auto e = weight(sigma, layout);
  EXPECT_EQ(e[layout.index("z_1")], 8 * 2 + 1);
  EXPECT_EQ(e[layout.index("z_2")], 10 * 2 + 2);
  EXPECT_EQ(e[layout.index("z_6")], 6);
}

TEST(Weight, SecondScheme) {
  const MultisetSpec spec({2, 3}, {2, 2});
  const auto pi = ColoredPermutation::parse(spec, "1^2 2^1 2^2 2^2 1^1");
  const BarredPermutation sigma{pi, BarMode::barred, {2, 1, 0, 1, 2, 0}};
  const auto layout = weight_layout(WeightScheme::thm2, spec, 10, 40);
  const auto e = weight(sigma, layout);
  EXPECT_EQ(e[layout.index("y_1")], 2);
  EXPECT_EQ(e[layout.index("y_2")], 3);
  EXPECT_EQ(e[layout.index("z_1^2")], 2 * 2);
  EXPECT_EQ(e[layout.index("z_2^1")], 3 * 2);
  EXPECT_EQ(e[layout.index("z_2^2")], 7 * 2);
  EXPECT_EQ(e[layout.index("z_1^1")], 6 * 2);
  EXPECT_EQ(e[layout.index("z_6")], 6);
}

TEST(Weight, FlagScheme) {
  const MultisetSpec spec({3, 2}, {3, 3});
  const auto pi = ColoredPermutation::parse(spec, "1^1 1^2 2^2 2^1 1^3");
  const BarredPermutation sigma{pi, BarMode::flag, {1, 2, 0, 1, 4, 2}};
  const auto layout = weight_layout(WeightScheme::flag, spec, 20, 40);
  EXPECT_EQ(weight(sigma, layout), (Exponent{10, 18, 13}));
  const BarredPermutation plain{pi, BarMode::barred, {1, 2, 0, 1, 4, 2}};
  EXPECT_THROW(weight(plain, layout), IncompatibleInput);
}

// Summing weights over explicit placements gives the closed-form term.
TEST(Weight, ClosedFormMatchesPlacementSum) {
  const MultisetSpec spec({2, 1}, {2, 2});
  for (WeightScheme scheme :
       {WeightScheme::thm1, WeightScheme::thm2, WeightScheme::ascent, WeightScheme::flag}) {
    const auto layout = weight_layout(scheme, spec, 3, 12);
    const BarMode mode = scheme == WeightScheme::flag     ? BarMode::flag
                         : scheme == WeightScheme::ascent ? BarMode::ascent
                                                          : BarMode::barred;
    for (const auto& pi : enumerate_colored_permutations(spec)) {
      TruncatedSeries sum(layout.caps);
      for (const auto& sigma : enumerate_barred(pi, 40, mode)) sum.add_term(weight(sigma, layout), Integer(1));
      EXPECT_EQ(sum, closed_form_term(pi, layout)) << to_string(scheme) << " " << pi.to_string();
    }
  }
}

TEST(Identity, ParseKinds) {
  EXPECT_EQ(parse_identity_kind("MACMAHON_MV"), IdentityKind::macmahon_mv);
  EXPECT_EQ(parse_identity_kind("flag"), IdentityKind::flag);
  EXPECT_THROW(parse_identity_kind("nope"), std::invalid_argument);
  EXPECT_EQ(all_identity_kinds().size(), 10u);
}

TEST(Identity, ClassicLeftSideIsBinomialProduct) {
  const std::vector<int> m{2, 1};
  const MultisetSpec spec(m, {1, 1});
  const auto sides = expand_identity(IdentityKind::classic, spec, {5, 24});
  for (int t = 0; t <= 5; ++t) {
    const Integer want(static_cast<long>(oracle::lattice_value(m, {1, 1}, t)));
    EXPECT_EQ(sides.lhs.coefficient({t}), want);
    EXPECT_EQ(sides.rhs.coefficient({t}), want);
  }
  EXPECT_TRUE(verify_identity(IdentityKind::classic, spec, {5, 24}).match);
}

TEST(Identity, ZeroCapsLeaveOnlyTheConstant) {
  for (IdentityKind kind : all_identity_kinds()) {
    const int r = (kind == IdentityKind::classic) ? 1 : 2;
    const auto rep = verify_identity(kind, MultisetSpec::uniform({1, 2}, r), {0, 0});
    EXPECT_TRUE(rep.match) << to_string(kind);
  }
}

TEST(Identity, Equidistribution) {
  const auto rep = verify_identity(IdentityKind::equidistribution, MultisetSpec::uniform({2, 2}, 2), {});
  EXPECT_TRUE(rep.match);
  EXPECT_FALSE(rep.witness.has_value());
}

TEST(Identity, KindRequirements) {
  EXPECT_THROW(check_kind_applies(IdentityKind::classic, MultisetSpec::uniform({1}, 2)), IncompatibleInput);
  EXPECT_THROW(check_kind_applies(IdentityKind::lin_a, MultisetSpec::uniform({1}, 1)), IncompatibleInput);
  EXPECT_THROW(check_kind_applies(IdentityKind::fdmaj, MultisetSpec({1, 1}, {1, 2})), IncompatibleInput);
  EXPECT_NO_THROW(check_kind_applies(IdentityKind::macmahon_mv, MultisetSpec({1, 1}, {1, 2})));
}

TEST(Identity, AllKindsOnSmallSpecs) {
  for (IdentityKind kind : all_identity_kinds()) {
    if (kind == IdentityKind::equidistribution) continue;
    for (const auto& m : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {2, 1}}) {
      const int r = kind == IdentityKind::classic ? 1 : 2;
      const auto rep = verify_identity(kind, MultisetSpec::uniform(m, r), {3, 12});
      EXPECT_TRUE(rep.match) << to_string(kind) << " m size " << m.size();
    }
  }
}

TEST(Identity, MixedColorsForMultivariateKinds) {
  const MultisetSpec spec({2, 1}, {1, 3});
  for (IdentityKind kind : {IdentityKind::macmahon_mv, IdentityKind::ascent_mv, IdentityKind::second_mv})
    EXPECT_TRUE(verify_identity(kind, spec, {3, 14}).match) << to_string(kind);
}

}  // namespace
}  // namespace cmep
