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

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "tilecount/errors.hpp"
#include "tilecount/flat.hpp"
#include "tilecount/typepoly.hpp"

namespace tilecount {
namespace {

using Cells = std::vector<std::pair<int, int>>;  // (row, left)

Cells Normalize(Cells c) {
  int r0 = c[0].first, l0 = c[0].second;
  for (auto [r, l] : c) {
    r0 = std::min(r0, r);
    l0 = std::min(l0, l);
  }
  for (auto& [r, l] : c) {
    r -= r0;
    l -= l0;
  }
  std::sort(c.begin(), c.end());
  return c;
}

// Grow every structure one tile at a time and dedupe by translation.
// Slow but shares nothing with the library walk.
std::vector<std::uint64_t> OracleCounts(int w, int n_max) {
  std::vector<std::uint64_t> out;
  std::set<Cells> level = {{{0, 0}}};
  out.push_back(1);
  for (int n = 2; n <= n_max; ++n) {
    std::set<Cells> next;
    for (const auto& s : level) {
      for (auto [r, l] : s) {
        for (int dr : {-1, 1}) {
          for (int nl = l - w + 1; nl <= l + w - 1; ++nl) {
            bool clash = false;
            for (auto [r2, l2] : s) {
              if (r2 == r + dr && std::abs(l2 - nl) < w) clash = true;
            }
            if (clash) continue;
            Cells t = s;
            t.emplace_back(r + dr, nl);
            next.insert(Normalize(std::move(t)));
          }
        }
      }
    }
    out.push_back(next.size());
    level = std::move(next);
  }
  return out;
}

TEST(FlatBrute, MatchesGrowthOracle) {
  for (int w = 1; w <= 4; ++w) {
    int n_max = w == 1 ? 7 : 6;
    auto oracle = OracleCounts(w, n_max);
    auto counts = CountFlatSeries(w, n_max);
    ASSERT_EQ(counts.size(), oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      EXPECT_EQ(counts[i], static_cast<unsigned long>(oracle[i])) << "w=" << w << " n=" << i + 1;
    }
  }
}

TEST(FlatBrute, KnownSmallCounts) {
  auto w2 = CountFlatSeries(2, 8);
  EXPECT_EQ(w2.back(), 16731);
  auto w1 = CountFlatSeries(1, 5);
  for (const auto& c : w1) EXPECT_EQ(c, 1);
}

TEST(FlatBrute, BudgetGivesExactPrefix) {
  EnumerationLimits lim;
  lim.max_visited = 200000;
  try {
    CountFlatSeries(3, 12, lim);
    FAIL() << "expected a resource limit";
  } catch (const ResourceLimitError& e) {
    ASSERT_GT(e.largest_completed_n(), 0);
    auto full = CountFlatSeries(3, e.largest_completed_n());
    ASSERT_EQ(static_cast<int>(e.partial_counts().size()), e.largest_completed_n());
    EXPECT_EQ(e.partial_counts(), full);
  }
}

TEST(FlatStructure, EveryEnumeratedStructureValidates) {
  for (int w = 1; w <= 3; ++w) {
    for (int n = 1; n <= 5; ++n) {
      auto all = ListFlat(w, n);
      EXPECT_EQ(all.size(), CountFlat(w, n));
      std::set<FlatStructure> seen;
      for (const auto& s : all) {
        EXPECT_EQ(ValidateFlat(s), "") << Serialize(s);
        EXPECT_TRUE(seen.insert(s).second);
      }
    }
  }
}

TEST(FlatStructure, ValidatorRejects) {
  FlatStructure overlap{2, {{0, 0}, {0, 1}}};
  EXPECT_NE(ValidateFlat(Canonicalize(overlap)), "");
  FlatStructure apart{2, {{0, 0}, {2, 0}}};
  EXPECT_NE(ValidateFlat(Canonicalize(apart)), "");
  FlatStructure same_row{2, {{0, 0}, {0, 2}}};
  EXPECT_NE(ValidateFlat(Canonicalize(same_row)), "");
}

TEST(FlatStructure, CanonicalFormTranslationInvariant) {
  for (const auto& s : ListFlat(3, 4)) {
    for (int dr : {-3, 0, 5}) {
      for (int dl : {-7, 2}) {
        FlatStructure t = s;
        for (auto& tile : t.tiles) {
          tile.row += dr;
          tile.left += dl;
        }
        std::reverse(t.tiles.begin(), t.tiles.end());
        EXPECT_EQ(Canonicalize(t), s);
      }
    }
  }
}

TEST(FlatStructure, SerializeRoundTrip) {
  for (const auto& s : ListFlat(2, 4)) {
    EXPECT_EQ(ParseFlatStructure(Serialize(s)), s);
  }
}

TEST(FlatStructure, OffsetsStartAtZero) {
  for (const auto& s : ListFlat(3, 4)) {
    auto b = Offsets(s);
    ASSERT_EQ(b.size(), 4u);
    EXPECT_EQ(b[0], 0);
  }
}

TEST(Pyramid, CountMatchesFormula) {
  for (int w = 1; w <= 4; ++w) {
    for (int n = 1; n <= 5; ++n) {
      std::uint64_t pyramids = 0;
      for (const auto& s : ListFlat(w, n)) pyramids += IsPyramid(s);
      EXPECT_EQ(BigInt(static_cast<unsigned long>(pyramids)), PyramidCount(n, w))
          << "w=" << w << " n=" << n;
    }
  }
}

}  // namespace
}  // namespace tilecount
