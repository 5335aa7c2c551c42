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

#include "cmep/eulerian.hpp"
#include "cmep/s_eulerian.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

namespace cmep {
namespace {

using testing_support::coeffs;

TEST(AscInversion, Examples) {
  const std::vector<int> s{1, 3, 1, 3};
  EXPECT_EQ(asc_inversion(std::vector<int>{0, 2, 0, 1}, s), 2);
  EXPECT_EQ(asc_inversion(std::vector<int>{0, 0, 0, 0}, s), 0);
  EXPECT_EQ(asc_inversion(std::vector<int>{1, 0}, std::vector<int>{2, 2}), 1);
  EXPECT_THROW(asc_inversion(std::vector<int>{1}, std::vector<int>{1}), std::invalid_argument);
}

TEST(SEulerian, Examples) {
  EXPECT_EQ(s_eulerian_poly(std::vector<int>{1, 3, 1, 3}), (IntPoly{1, 4, 4}));
  EXPECT_EQ(s_eulerian_poly(std::vector<int>{1}), (IntPoly{1}));
  EXPECT_EQ(s_eulerian_poly(std::vector<int>{1, 2, 3}), (IntPoly{1, 4, 1}));
}

TEST(SEulerian, MatchesOracle) {
  for (const auto& s : std::vector<std::vector<int>>{{2, 3, 1}, {1, 1, 3, 2, 5}, {4, 2, 2}, {3}})
    EXPECT_EQ(coeffs(s_eulerian_poly(s)), oracle::s_eulerian(s));
}

TEST(Hat, Examples) {
  EXPECT_EQ(hat_sequence(4, 1), (SSequence{1, 1, 3, 2}));
  EXPECT_EQ(hat_sequence(5, 2), (SSequence{2, 2, 6, 4, 10}));
  EXPECT_EQ(hat_sequence(1, 7), (SSequence{7}));
}

TEST(Equalities, SmallCases) {
  for (int r = 1; r <= 3; ++r)
    for (const auto& c : verify_s_equalities(1, r)) EXPECT_TRUE(c.equal) << c.name;
  for (const auto& c : verify_s_equalities(2, 2)) EXPECT_TRUE(c.equal) << c.name;
  const auto checks = verify_s_equalities(2, 1);
  EXPECT_EQ(checks[1].e_poly, (IntPoly{1, 4, 1}));
  EXPECT_EQ(checks[1].a_poly, (IntPoly{1, 4, 1}));
  EXPECT_EQ(verify_s_equalities(1, 3)[0].a_poly, (IntPoly{1, 2}));
}

TEST(Search, NoSequenceGivesTheTwentyWordPolynomial) {
  const auto rep = not_s_eulerian_search(IntPoly{1, 9, 9, 1});
  EXPECT_EQ(rep.size, Integer(20));
  EXPECT_TRUE(rep.matches.empty());
  EXPECT_GT(rep.evaluated.size(), 0u);
}

TEST(Search, PositiveControl) {
  const auto rep = not_s_eulerian_search(IntPoly{1, 4, 4});
  EXPECT_NE(std::find(rep.matches.begin(), rep.matches.end(), SSequence{1, 3, 1, 3}), rep.matches.end());
  for (const auto& s : rep.matches) EXPECT_EQ(coeffs(s_eulerian_poly(s)), (std::vector<long long>{1, 4, 4}));
}

TEST(Search, TrivialTarget) {
  const auto rep = not_s_eulerian_search(IntPoly{1});
  ASSERT_EQ(rep.matches.size(), 1u);
  EXPECT_EQ(rep.matches[0], (SSequence{1}));
}

TEST(Remark, SmallCases) {
  auto rep = verify_decomposition_remark(1);
  EXPECT_EQ(rep.decomposition.a, (IntPoly{1}));
  EXPECT_TRUE(rep.decomposition.b.is_zero());
  rep = verify_decomposition_remark(2);
  EXPECT_EQ(rep.polynomial, (IntPoly{1, 2}));
  EXPECT_EQ(rep.decomposition.a, (IntPoly{1, 1}));
  EXPECT_EQ(rep.decomposition.b, (IntPoly{1}));
  EXPECT_EQ(coeffs(rep.a_expected), oracle::s_eulerian(rep.a_sequence));
  EXPECT_TRUE(rep.a_matches && rep.b_matches);
  rep = verify_decomposition_remark(3);
  EXPECT_TRUE(rep.a_matches && rep.b_matches);
}

}  // namespace
}  // namespace cmep
