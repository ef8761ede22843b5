// Copyright 2026 The tilecount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "tilecount/errors.hpp"
#include "tilecount/exact.hpp"

namespace tilecount {
namespace {

TEST(Binomial, SmallValues) {
  EXPECT_EQ(Binomial(5, 2), 10);
  EXPECT_EQ(Binomial(7, 0), 1);
  EXPECT_EQ(Binomial(11, 3), 165);
  EXPECT_EQ(Binomial(4, 5), 0);
  EXPECT_EQ(Binomial(4, -1), 0);
}

TEST(Binomial, PascalRule) {
  for (int m = 1; m < 40; ++m) {
    for (int k = 1; k < m; ++k) {
      EXPECT_EQ(Binomial(m, k), Binomial(m - 1, k - 1) + Binomial(m - 1, k));
    }
  }
}

TEST(Stirling, BaseValues) {
  EXPECT_EQ(StirlingFirst(3, 1), 2);
  EXPECT_EQ(StirlingFirst(4, 2), 11);
  EXPECT_EQ(StirlingFirst(4, 1), -6);
  EXPECT_EQ(StirlingSecond(4, 2), 7);
  EXPECT_EQ(StirlingSecond(5, 3), 25);
  EXPECT_THROW(StirlingFirst(2, 3), DomainError);
}

// sum_i s(k,i) S(i,j) = [k == j]
TEST(Stirling, InverseMatrices) {
  for (int k = 0; k <= 12; ++k) {
    for (int j = 0; j <= k; ++j) {
      BigInt acc = 0;
      for (int i = j; i <= k; ++i) acc += StirlingFirst(k, i) * StirlingSecond(i, j);
      EXPECT_EQ(acc, k == j ? 1 : 0) << k << "," << j;
    }
  }
}

TEST(Rational, Canonical) {
  Rational r = MakeRational(BigInt(-10), BigInt(2));
  EXPECT_EQ(r, Rational(-5));
  Rational s = MakeRational(BigInt(3), BigInt(-6));
  EXPECT_EQ(s.get_den(), 2);
  EXPECT_EQ(s.get_num(), -1);
  EXPECT_THROW(MakeRational(BigInt(1), BigInt(0)), DomainError);
}

TEST(Polynomial, ToStringAndEval) {
  Polynomial p({MakeRational(-1, 1), MakeRational(53, 6), MakeRational(-41, 2),
                MakeRational(41, 3)});
  EXPECT_EQ(p.ToString("w"), "41/3 w^3 - 41/2 w^2 + 53/6 w - 1");
  EXPECT_EQ(p(Rational(3)), 210);
  EXPECT_EQ(p.degree(), 3);
}

TEST(Polynomial, DivideByLinear) {
  Polynomial p = Polynomial::Linear(2) * Polynomial::Linear(-3);
  EXPECT_EQ(p.DivideByLinear(2), Polynomial::Linear(-3));
  EXPECT_THROW(p.DivideByLinear(1), DomainError);
}

TEST(Basis, RoundTripBothRoutes) {
  BinomialRep rep{{1, 43, 123, 82}};
  Polynomial p = MonomialFromBinomial(rep);
  EXPECT_EQ(p, MonomialFromBinomialStirling(rep));
  EXPECT_EQ(BinomialFromMonomial(p), rep);
  EXPECT_EQ(BinomialFromMonomialStirling(p), rep);
  for (int w = 1; w <= 6; ++w) EXPECT_EQ(Rational(rep.Evaluate(w)), p(Rational(w)));
}

TEST(Basis, RandomRoundTrips) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(7);
  for (int trial = 0; trial < 30; ++trial) {
    BinomialRep rep;
    int n = 1 + trial % 12;
    for (int k = 0; k < n; ++k) rep.a.push_back(rng.get_z_bits(40));
    Polynomial p = MonomialFromBinomial(rep);
    EXPECT_EQ(BinomialFromMonomial(p), rep);
    EXPECT_EQ(MonomialFromBinomialStirling(rep), p);
  }
}

TEST(Linear, SolveAndSingular) {
  RationalMatrix m = {{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
  auto x = SolveExactLinear(m, {Rational(3), Rational(5)});
  EXPECT_EQ(x[0], MakeRational(4, 5));
  EXPECT_EQ(x[1], MakeRational(7, 5));
  RationalMatrix sing = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  EXPECT_THROW(SolveExactLinear(sing, {Rational(1), Rational(1)}), SingularMatrixError);
}

TEST(Linear, BareissMatchesCofactor) {
  std::vector<std::vector<BigInt>> m = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  EXPECT_EQ(Determinant(m), 4);
  std::vector<std::vector<BigInt>> h = {{1, 1, 2}, {1, 2, 5}, {2, 5, 14}};
  EXPECT_EQ(Determinant(h), 1);
}

TEST(Interpolate, RecoversPolynomial) {
  Polynomial p({Rational(1), Rational(-5), Rational(5)});
  std::vector<Rational> xs, ys;
  for (int x = -2; x <= 2; ++x) {
    xs.emplace_back(x);
    ys.push_back(p(Rational(x)));
  }
  EXPECT_EQ(Interpolate(xs, ys), p);
}

}  // namespace
}  // namespace tilecount
