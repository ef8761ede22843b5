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

#include <map>

#include "tilecount/errors.hpp"
#include "tilecount/flat.hpp"
#include "tilecount/typepoly.hpp"

namespace tilecount {
namespace {

TEST(Types, CoefficientsSmallN) {
  std::vector<BigInt> three = {1, 10, 10};
  std::vector<BigInt> four = {1, 43, 123, 82};
  EXPECT_EQ(TypeCoefficients(3, 3), three);
  EXPECT_EQ(TypeCoefficients(4, 4), four);
}

TEST(Types, MultiplicityIsBinomial) {
  for (int n = 1; n <= 4; ++n) {
    for (int w = 1; w <= 4; ++w) {
      auto r = TypeMultiplicityCheck(n, w);
      EXPECT_TRUE(r.ok()) << "n=" << n << " w=" << w;
      EXPECT_EQ(r.Total(), CountFlat(w, n));
    }
  }
}

// Same type at two widths: residues and quotients only depend on the offsets.
TEST(Types, ClassifyIsWidthFree) {
  std::map<TypeSignature, int> at3, at4;
  for (const auto& s : ListFlat(3, 3)) ++at3[Classify(s)];
  for (const auto& s : ListFlat(4, 3)) ++at4[Classify(s)];
  for (const auto& [t, c] : at3) {
    ASSERT_TRUE(at4.count(t));
    EXPECT_EQ(BigInt(c), Binomial(2, t.k - 1));
    EXPECT_EQ(BigInt(at4[t]), Binomial(3, t.k - 1));
  }
}

TEST(Types, NormalizeRelabelsByRank) {
  std::vector<int> raw = {0, 2, 2, 1}, want = {0, 2, 2, 1};
  EXPECT_EQ(NormalizeResidues(raw), want);
  std::vector<int> sparse = {0, 5, 3}, want2 = {0, 2, 1};
  EXPECT_EQ(NormalizeResidues(sparse), want2);
}

std::vector<std::pair<int, BigInt>> BruteValues(int n, int max_w) {
  std::vector<std::pair<int, BigInt>> v;
  for (int w = 1; w <= max_w; ++w) v.emplace_back(w, CountFlat(w, n));
  return v;
}

TEST(Polynomials, FitFromCounts) {
  PolynomialFamily f = FitPolynomial(4, BruteValues(4, 5), false);
  EXPECT_EQ(f.monomial.ToString("w"), "41/3 w^3 - 41/2 w^2 + 53/6 w - 1");
  BinomialRep want{{1, 43, 123, 82}};
  EXPECT_EQ(f.binomial, want);
  EXPECT_EQ(f.source, PolynomialSource::kFittedFromCounts);
  EXPECT_TRUE(AllPassed(IdentitySuite(f)));
}

TEST(Polynomials, SymmetryHalvesTheWidths) {
  for (int n = 2; n <= 6; ++n) {
    auto plain = FitPolynomial(n, BruteValues(n, n), false);
    auto sym = FitPolynomial(n, BruteValues(n, n / 2 + 1), true);
    EXPECT_EQ(plain.monomial, sym.monomial) << n;
    EXPECT_EQ(sym.source, PolynomialSource::kFittedWithSymmetry);
  }
}

TEST(Polynomials, TooFewPoints) {
  EXPECT_THROW(FitPolynomial(5, BruteValues(5, 3), false), DomainError);
}

TEST(Polynomials, IdentitiesFailOnArbitraryPolynomial) {
  PolynomialFamily f = MakeFamily(3, Polynomial({Rational(1), Rational(2), Rational(3)}),
                                  PolynomialSource::kFittedFromCounts);
  EXPECT_FALSE(AllPassed(IdentitySuite(f)));
}

TEST(Pyramid, PolynomialMatchesCounts) {
  for (int n = 1; n <= 7; ++n) {
    PolynomialFamily f = PyramidPolynomial(n);
    EXPECT_EQ(f.monomial.degree(), n - 1);
    for (int w = 1; w <= 9; ++w) EXPECT_EQ(f.monomial(Rational(w)), Rational(PyramidCount(n, w)));
  }
  EXPECT_EQ(PyramidCount(4, 3), 165);
  EXPECT_EQ(PyramidPolynomial(3).monomial.ToString("w"), "9/2 w^2 - 9/2 w + 1");
}

TEST(GfNumerators, SmallN) {
  auto f5 = FitPolynomial(5, BruteValues(5, 3), true);
  GFNumerator g = GfNumerator(f5);
  EXPECT_EQ(g.a.ToString("x"), "x^4 + 181 x^3 + 586 x^2 + 181 x + 1");
  EXPECT_TRUE(g.palindromic);
  EXPECT_TRUE(g.reciprocity);
  EXPECT_TRUE(g.unimodal);
  auto f4 = FitPolynomial(4, BruteValues(4, 4), false);
  GFNumerator g4 = GfNumerator(f4);
  ASSERT_TRUE(g4.even_factor.has_value());
  EXPECT_TRUE(g4.even_factor_ok);
  EXPECT_EQ(g4.a, Polynomial::Linear(-1) * *g4.even_factor);
}

TEST(Polynomials, JsonRoundTrip) {
  auto f = FitPolynomial(4, BruteValues(4, 4), false);
  std::string text = PolynomialToJson(f);
  PolynomialFamily back = PolynomialFromJson(text);
  EXPECT_EQ(back.monomial, f.monomial);
  EXPECT_EQ(back.binomial, f.binomial);
  EXPECT_EQ(PolynomialToJson(back), text);
}

TEST(Polynomials, PalindromeHelpers) {
  Polynomial p({Rational(1), Rational(4), Rational(1)});
  EXPECT_TRUE(IsPalindromic(p, 2));
  EXPECT_TRUE(IsWeaklyUnimodal(p));
  Polynomial q({Rational(3), Rational(1), Rational(3)});
  EXPECT_FALSE(IsWeaklyUnimodal(q));
}

}  // namespace
}  // namespace tilecount
