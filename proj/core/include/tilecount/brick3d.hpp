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

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tilecount/exact.hpp"

namespace tilecount {

enum class Orientation : std::uint8_t { kEastWest = 0, kNorthSouth = 1 };

/// A 2x4 brick; (x, y) is the minimum stud corner of its footprint, which is
/// 4x2 studs east-west or 2x4 studs north-south.
struct BrickPlacement {
  int x = 0;
  int y = 0;
  int z = 0;
  Orientation orient = Orientation::kEastWest;

  int x_extent() const { return orient == Orientation::kEastWest ? 4 : 2; }
  int y_extent() const { return orient == Orientation::kEastWest ? 2 : 4; }
  /// Layer-major order used for canonical forms.
  friend auto operator<=>(const BrickPlacement& a, const BrickPlacement& b) {
    if (auto c = a.z <=> b.z; c != 0) return c;
    if (auto c = a.y <=> b.y; c != 0) return c;
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.orient <=> b.orient;
  }
  friend bool operator==(const BrickPlacement&, const BrickPlacement&) = default;
};

bool FootprintsOverlap(const BrickPlacement& a, const BrickPlacement& b);
/// Quarter turn about the vertical axis: stud (a, b) -> (-b, a).
BrickPlacement RotateQuarter(const BrickPlacement& b);

using Building = std::vector<BrickPlacement>;

/// Empty string when the bricks form a valid building: no same-layer
/// overlap, and connected through stud overlap between adjacent layers.
std::string ValidateBuilding(const Building& b);

/// Translate the minimum brick to the origin and sort.
Building NormalizeTranslation(Building b);
/// Least normalized form over the four rotations; equal exactly for
/// buildings related by translation and rotation.
Building CanonicalForm(const Building& b);
std::string SerializeBuilding(const Building& b);

struct BuildingCountOptions {
  int threads = 1;
  /// Upper bound on (translation-class) buildings visited.
  std::uint64_t max_visited = 20'000'000'000ull;
};

/// Per-size tallies from one walk over translation classes.
struct BuildingTally {
  std::vector<std::uint64_t> translation_classes;
  std::vector<std::uint64_t> quarter_turn_symmetric;
  std::vector<std::uint64_t> half_turn_symmetric;
};

BuildingTally TallyBuildings(int n_max, const BuildingCountOptions& options = {});

/// Buildings of 1..n_max bricks up to translation and rotation about the
/// vertical axis. Walks translation classes once and applies Burnside's lemma
/// over the rotation group.
std::vector<BigInt> CountBuildingsSeries(int n_max, const BuildingCountOptions& options = {});
BigInt CountBuildings(int n, const BuildingCountOptions& options = {});

/// Independent route: grow canonical forms brick by brick and deduplicate in
/// a set. Memory grows with the count; meant for n <= 4.
std::vector<BigInt> CountBuildingsByOrbitDedup(int n_max);
/// All canonical forms of size n from the deduplicating route.
std::vector<Building> ListCanonicalBuildings(int n);

}  // namespace tilecount
