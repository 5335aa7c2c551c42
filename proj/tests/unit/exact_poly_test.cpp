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

#include "cmep/ehrhart.hpp"
#include "cmep/poly_ops.hpp"
#include "cmep/q_binomial.hpp"
#include "cmep/series.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

namespace cmep {
namespace {

using testing_support::coeffs;

TEST(Polynomial, TrimsAndMultiplies) {
  const IntPoly a{1, 2, 0, 0};
  EXPECT_EQ(a.degree(), 1);
  EXPECT_EQ(coeffs(a * a), (std::vector<long long>{1, 4, 4}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ(IntPoly({1, 1}).pow(4), (IntPoly{1, 4, 6, 4, 1}));
}

TEST(QBinomial, SmallValues) {
  EXPECT_EQ(q_binomial(3, 1), (IntPoly{1, 1, 1}));
  EXPECT_EQ(q_binomial(7, 0), (IntPoly{1}));
  EXPECT_TRUE(q_binomial(2, 3).is_zero());
  EXPECT_TRUE(q_binomial(2, -1).is_zero());
  EXPECT_EQ(q_binomial(4, 2), (IntPoly{1, 1, 2, 1, 1}));
}

TEST(QBinomial, PascalAgreesWithSequenceSum) {
  for (long a = 0; a <= 7; ++a)
    for (long b = 0; b <= a; ++b) {
      ASSERT_EQ(q_binomial(a, b), q_binomial_by_sequences(a, b)) << a << "," << b;
      EXPECT_EQ(q_binomial(a, b).evaluate(Integer(1)), binomial(a, b));
    }
}

TEST(Hstar, ProductOfSimplices) {
  RatPoly c3 = RatPoly::constant(Rational(1), "t");
  for (int i = 1; i <= 3; ++i) c3 *= RatPoly(std::vector<Rational>{Rational(i), Rational(1)}, "t");
  c3 = c3 * RatPoly::constant(Rational(1, 6), "t");
  EXPECT_EQ(hstar_from_ehrhart(c3 * c3, 6), (IntPoly{1, 9, 9, 1}));
  EXPECT_EQ(coeffs(hstar_from_ehrhart(c3 * c3, 6)), oracle::descent_polynomial({3, 3}, {1, 1}));
  EXPECT_EQ(hstar_from_ehrhart(RatPoly(std::vector<Rational>{1, 1}, "t"), 1), (IntPoly{1}));
  EXPECT_EQ(hstar_from_ehrhart(RatPoly(std::vector<Rational>{1, 2}, "t"), 1), (IntPoly{1, 1}));
}

TEST(Hstar, RejectsNonIntegerValues) {
  const RatPoly half(std::vector<Rational>{Rational(1, 2)}, "t");
  EXPECT_THROW(hstar_from_ehrhart(half, 1), NotEhrhartError);
  EXPECT_THROW(hstar_from_ehrhart(RatPoly(std::vector<Rational>{1, 0, 1}, "t"), 1), DegreeError);
}

TEST(Reciprocal, Examples) {
  EXPECT_EQ(reciprocal(IntPoly{1, 5, 17, 15, 2}, 4), (IntPoly{2, 15, 17, 5, 1}));
  EXPECT_EQ(reciprocal(IntPoly{1, 11, 11, 1}, 3), (IntPoly{1, 11, 11, 1}));
  const IntPoly p{3, 0, 2};
  EXPECT_EQ(reciprocal(reciprocal(p, 5), 5), p);
  EXPECT_THROW(reciprocal(p, 1), DegreeError);
}

TEST(Reflect, Examples) {
  EXPECT_EQ(reflect(IntPoly{1, 3}, 1), (IntPoly{2, 3}));
  EXPECT_EQ(reflect(IntPoly{1, 4, 4}, 2), (IntPoly{1, 4, 4}));
  EXPECT_EQ(reflect(IntPoly{5}, 3), (IntPoly{-5}));
  EXPECT_EQ(reflect(IntPoly{5}, 2), (IntPoly{5}));
}

TEST(Palindromic, Examples) {
  EXPECT_TRUE(palindromic(IntPoly{1, 9, 9, 1}, 3));
  EXPECT_FALSE(palindromic(IntPoly{1, 2}, 1));
  EXPECT_FALSE(palindromic(IntPoly{1, 2}, 2));
  EXPECT_TRUE(palindromic(IntPoly{1, 4, 6, 4, 1}, 4));
  EXPECT_TRUE(palindromic(IntPoly{0, 1}, 2));
}

TEST(RationalOps, DivisionAndGcd) {
  const RatPoly a(std::vector<Rational>{-1, 0, 1});  // x^2 - 1
  const RatPoly b(std::vector<Rational>{1, 1});      // x + 1
  const auto [q, r] = divmod(a, b);
  EXPECT_EQ(q, RatPoly(std::vector<Rational>{-1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(a, RatPoly(std::vector<Rational>{2, 2})), b);
  EXPECT_THROW(exact_quotient(a, RatPoly(std::vector<Rational>{2, 1})), std::exception);
}

TEST(TruncatedSeries, CapsActAsQuotient) {
  TruncatedSeries s({2, 3});
  s.add_term({1, 1}, Integer(2));
  s.add_term({3, 0}, Integer(5));
  EXPECT_EQ(s.size(), 1u);
  const auto sq = s * s;
  EXPECT_EQ(sq.size(), 1u);
  EXPECT_EQ(sq.coefficient({2, 2}), Integer(4));
  EXPECT_TRUE((sq * s).is_zero());
  TruncatedSeries one = TruncatedSeries::one({2, 3});
  one.divide_one_minus({0, 1}, 1);
  EXPECT_EQ(one.size(), 4u);
  EXPECT_EQ(one.coefficient({0, 3}), Integer(1));
}

TEST(TruncatedSeries, RepeatedGeometricDivision) {
  TruncatedSeries s = TruncatedSeries::one({3, 8});
  s.divide_one_minus({1, 1}, 1);
  s.divide_one_minus({0, 1}, 1);
  // 1 / ((1 - q x)(1 - x)) has coefficient 1 at q^i x^j for every i <= j.
  for (int j = 0; j <= 8; ++j)
    for (int i = 0; i <= 3; ++i) EXPECT_EQ(s.coefficient({i, j}), Integer(i <= j ? 1 : 0)) << i << j;
  EXPECT_THROW(s.divide_one_minus({1, 0}, 1), std::invalid_argument);
}

TEST(Subdivision, BinomialBasisGoesToMonomials) {
  for (long k = 0; k <= 6; ++k) {
    RatPoly c = RatPoly::constant(Rational(1), "t");
    for (long i = 0; i < k; ++i) c *= RatPoly(std::vector<Rational>{Rational(-i), Rational(1)}, "t");
    c = c * RatPoly::constant(Rational(1) / Rational(factorial(static_cast<unsigned long>(k))), "t");
    EXPECT_EQ(subdivision_operator(c), RatPoly::monomial(Rational(1), static_cast<std::size_t>(k))) << k;
  }
  EXPECT_EQ(subdivision_operator(RatPoly(std::vector<Rational>{0, 0, 1}, "t")),
            RatPoly(std::vector<Rational>{0, 1, 2}));
  EXPECT_EQ(subdivision_operator(RatPoly::constant(Rational(1), "t")), RatPoly::constant(Rational(1)));
}

TEST(Magic, Examples) {
  EXPECT_EQ(magic_basis_expansion(RatPoly(std::vector<Rational>{1, 2}, "t"), 1),
            (std::vector<Rational>{1, 1}));
  EXPECT_EQ(magic_basis_expansion(RatPoly(std::vector<Rational>{1, 3}, "t"), 1),
            (std::vector<Rational>{1, 2}));
  const RatPoly one_plus_t(std::vector<Rational>{1, 1}, "t");
  EXPECT_EQ(magic_basis_expansion(one_plus_t.pow(3), 3), (std::vector<Rational>{1, 0, 0, 0}));
}

}  // namespace
}  // namespace cmep
