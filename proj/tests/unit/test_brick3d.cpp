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

#include <set>
#include <string>

#include "tilecount/brick3d.hpp"

namespace tilecount {
namespace {

TEST(Brick3d, SmallCounts) {
  auto c = CountBuildingsSeries(4);
  std::vector<BigInt> want = {1, 24, 1560, 119580};
  EXPECT_EQ(c, want);
}

TEST(Brick3d, BurnsideMatchesOrbitDedup) {
  EXPECT_EQ(CountBuildingsSeries(4), CountBuildingsByOrbitDedup(4));
}

TEST(Brick3d, ThreadsAgree) {
  BuildingCountOptions one, three;
  three.threads = 3;
  EXPECT_EQ(CountBuildingsSeries(4, one), CountBuildingsSeries(4, three));
}

TEST(Brick3d, CanonicalFormIsOrbitInvariant) {
  for (const auto& b : ListCanonicalBuildings(3)) {
    EXPECT_EQ(ValidateBuilding(b), "");
    EXPECT_EQ(CanonicalForm(b), b);
    Building r = b;
    for (int turn = 0; turn < 4; ++turn) {
      for (auto& p : r) p = RotateQuarter(p);
      Building moved = r;
      for (auto& p : moved) {
        p.x += 11;
        p.y -= 4;
        p.z += 2;
      }
      EXPECT_EQ(CanonicalForm(moved), b);
    }
  }
}

TEST(Brick3d, ListedBuildingsAreDistinct) {
  auto all = ListCanonicalBuildings(3);
  EXPECT_EQ(all.size(), 1560u);
  std::set<std::string> seen;
  for (const auto& b : all) EXPECT_TRUE(seen.insert(SerializeBuilding(b)).second);
}

TEST(Brick3d, Overlap) {
  BrickPlacement a{0, 0, 0, Orientation::kEastWest};
  BrickPlacement b{3, 1, 0, Orientation::kEastWest};
  BrickPlacement c{4, 0, 0, Orientation::kEastWest};
  EXPECT_TRUE(FootprintsOverlap(a, b));
  EXPECT_FALSE(FootprintsOverlap(a, c));
  BrickPlacement d{1, -2, 0, Orientation::kNorthSouth};
  EXPECT_TRUE(FootprintsOverlap(a, d));
}

}  // namespace
}  // namespace tilecount
