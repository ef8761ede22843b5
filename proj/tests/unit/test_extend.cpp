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

#include <cmath>

#include "tilecount/errors.hpp"
#include "tilecount/extend.hpp"
#include "tilecount/flat_transfer.hpp"
#include "tilecount/series.hpp"

namespace tilecount {
namespace {

// F = 1/sqrt(1-4x) - 1 satisfies (1-4x) xF' - 2xF - 2x = 0.
std::vector<BigInt> CentralBinomials(int terms) {
  std::vector<BigInt> a;
  for (int n = 1; n <= terms; ++n) a.push_back(Binomial(2 * n, n));
  return a;
}

// Flat w=2 counts from the transfer engine; no stored data.
const std::vector<BigInt>& FlatW2() {
  static const std::vector<BigInt> counts = TmCount(2, 16);
  return counts;
}

CountSeries Prefix(const std::vector<BigInt>& all, int n) {
  return CountSeries::FromCounts("custom", std::nullopt,
                                 std::vector<BigInt>(all.begin(), all.begin() + n), "t");
}

TEST(Approximant, MinimalOdeIsExact) {
  auto all = CentralBinomials(20);
  auto s = Prefix(all, 8);
  DifferentialApproximant a = FitApproximant(s, 1, {1, 1}, 1);
  EXPECT_EQ(a.q[1][1], Rational(-4));
  auto next = RecurrenceForward(a, s, 12);
  ASSERT_EQ(next.size(), 12u);
  for (int i = 0; i < 12; ++i) EXPECT_EQ(next[i], Rational(all[8 + i])) << i;
}

TEST(Approximant, UnknownCount) {
  EXPECT_EQ(ApproximantUnknowns({2, 2}, 1), 3 + 3 - 1 + 2);
  EXPECT_EQ(ApproximantUnknowns({0, 1}, 0), 3);
}

TEST(Approximant, RedundantDegreesAreSingular) {
  auto s = Prefix(CentralBinomials(20), 20);
  EXPECT_THROW(FitApproximant(s, 1, {3, 4}, 2), SingularMatrixError);
}

TEST(Ensemble, PredictsFlatCounts) {
  const auto& all = FlatW2();
  auto s = Prefix(all, 14);
  EnsembleSpec spec;
  spec.max_relative_sigma = 0;
  auto [ext, ens] = ExtendSeries(s, 2, spec);
  ASSERT_EQ(ens.entries.size(), 2u);
  EXPECT_EQ(ext.size(), 16);
  EXPECT_EQ(ext.num_exact(), 14);
  for (int i = 0; i < 2; ++i) {
    double truth = static_cast<double>(ToLongDouble(all[14 + i]));
    EXPECT_NEAR(ens.entries[i].mean / truth, 1.0, 1e-4);
    EXPECT_EQ(ext.terms[14 + i].provenance, Provenance::kPredicted);
  }
}

TEST(Ensemble, ThreadsAgree) {
  auto s = Prefix(FlatW2(), 14);
  EnsembleSpec one, two;
  one.max_relative_sigma = two.max_relative_sigma = 0;
  two.threads = 2;
  auto a = ExtendSeries(s, 2, one).second;
  auto b = ExtendSeries(s, 2, two).second;
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].mean, b.entries[i].mean);
    EXPECT_EQ(a.entries[i].sigma, b.entries[i].sigma);
  }
}

TEST(Holdout, FlatCounts) {
  auto s = Prefix(FlatW2(), 16);
  HoldoutResult h = Holdout(s, 2);
  EXPECT_EQ(h.dropped, 2);
  ASSERT_EQ(h.truth.size(), 2u);
  EXPECT_EQ(h.truth[1], FlatW2()[15]);
}

}  // namespace
}  // namespace tilecount
