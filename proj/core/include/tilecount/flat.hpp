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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tilecount/exact.hpp"

namespace tilecount {

struct Tile {
  int row = 0;
  int left = 0;
  friend auto operator<=>(const Tile&, const Tile&) = default;
};

/// Flat arrangement of w x 1 tiles. Tiles in adjacent rows interlock when
/// they share at least one column; same-row contact does not connect.
struct FlatStructure {
  int w = 1;
  /// Sorted by (row, left) once canonical.
  std::vector<Tile> tiles;

  int size() const { return static_cast<int>(tiles.size()); }
  int height() const;
  friend auto operator<=>(const FlatStructure&, const FlatStructure&) = default;
};

/// Horizontal offsets b_i of the tiles numbered bottom-left to top-right,
/// relative to the leftmost tile of the bottom row (b_0 = 0).
using OffsetSequence = std::vector<int>;

/// Shifts rows to start at 0, puts the leftmost bottom-row tile at column 0,
/// and sorts tiles by (row, left).
FlatStructure Canonicalize(FlatStructure s);

/// Empty string if `s` is a valid canonical structure, else the first
/// violated invariant.
std::string ValidateFlat(const FlatStructure& s);

OffsetSequence Offsets(const FlatStructure& s);

/// One base tile, every other tile overlapping a tile in the row below.
bool IsPyramid(const FlatStructure& s);

/// `w=<w> tiles=(r,l);(r,l);...`
std::string Serialize(const FlatStructure& s);
FlatStructure ParseFlatStructure(std::string_view line);

struct EnumerationLimits {
  /// Upper bound on partial structures visited (all sizes together).
  std::uint64_t max_visited = 100'000'000;
};

/// Calls `sink` once per canonical n-tile structure, in a fixed order.
void EnumerateFlat(int w, int n, const std::function<void(const FlatStructure&)>& sink,
                   EnumerationLimits limits = {});

/// All n-tile structures, sorted lexicographically by tile sequence.
std::vector<FlatStructure> ListFlat(int w, int n, EnumerationLimits limits = {});

/// a_1..a_{n_max} by explicit enumeration. Throws ResourceLimitError with
/// the exact prefix when the visit budget runs out.
std::vector<BigInt> CountFlatSeries(int w, int n_max, EnumerationLimits limits = {});
BigInt CountFlat(int w, int n, EnumerationLimits limits = {});

/// Number of structures of exactly n tiles at width w, bucketed by offset
/// complexity (index k-1 holds complexity k). Counting-only fast path.
std::vector<BigInt> CountFlatByComplexity(int w, int n, EnumerationLimits limits = {});

}  // namespace tilecount
