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

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "tilecount/exact.hpp"

namespace tilecount {

/// Cell-by-cell transfer-matrix counter for flat w x 1 structures.
///
/// The region is scanned row by row from the bottom, left to right inside a
/// row. The DP state is the boundary: for every column the most recently
/// scanned cell (empty, or occupied with a connectivity-class label), the
/// number of cells still owed by the tile in progress, and whether the left
/// and right region edges have been touched. Each state carries a count
/// vector indexed by tiles used so far. Structures must touch row 0.
struct TransferOptions {
  /// kExactWidth counts structures touching both side edges of the region;
  /// kLeftEdge counts those touching the left edge and fitting inside.
  enum class Anchor { kExactWidth, kLeftEdge };
  /// Engine used by TmCount. kCellScan is a single left-anchored region of
  /// width 1+n(w-1); kRowTransfer builds rows tile by tile in coordinates
  /// relative to the last placed tile, which avoids replicating a partial
  /// structure at every horizontal offset. kAuto picks by tile width.
  enum class Method { kAuto, kCellScan, kRowTransfer };

  int threads = 1;
  /// Approximate cap on signature-table memory.
  std::uint64_t memory_budget_bytes = 8ull << 30;
  /// Wall-clock cap in seconds; 0 means none.
  double time_budget_seconds = 0;
  /// Drop states that cannot finish within the tile budget. Off only for
  /// A/B testing of the pruning rules.
  bool prune = true;
  Anchor anchor = Anchor::kExactWidth;
  Method method = Method::kAuto;
  /// Called after every cell with (global cell index, table size).
  std::function<void(std::uint64_t, std::size_t)> on_cell;
};

/// Decoded boundary signature, for inspection and tests.
struct BoundarySignature {
  /// 0 = empty, otherwise connectivity class + 1 (canonical first-occurrence labels).
  std::vector<std::uint8_t> cells;
  /// Cells still owed by the tile in progress to the left of the scan point.
  int remaining = 0;
  bool touches_left = false;
  bool touches_right = false;
  friend bool operator==(const BoundarySignature&, const BoundarySignature&) = default;
};

struct SignatureEntry {
  BoundarySignature signature;
  /// counts[t] = number of partial structures using t tiles.
  std::vector<BigInt> counts;
};

/// One region width. Owns the signature table and advances it one cell at a
/// time.
class TransferMatrix {
 public:
  TransferMatrix(int w, int n_max, int region_width, TransferOptions options = {});
  ~TransferMatrix();
  TransferMatrix(TransferMatrix&&) noexcept;
  TransferMatrix& operator=(TransferMatrix&&) noexcept;

  int region_width() const;
  int rows() const;
  /// Index of the next cell to scan (row * region_width + column).
  std::uint64_t position() const;
  bool finished() const;

  /// Processes the next cell: every signature branches into leaving the cell
  /// empty, continuing the tile in progress, or starting a new tile.
  void Step();
  /// Applies the tile-budget pruning rule to the whole table; returns the
  /// number of signatures removed.
  std::size_t Prune();
  /// Runs Step() until the scan ends or the table empties.
  void Run();

  std::size_t table_size() const;
  std::size_t peak_table_size() const;
  std::uint64_t approx_memory_bytes() const;
  std::vector<SignatureEntry> Snapshot() const;
  /// completed()[n] = structures of exactly n tiles with this bounding width.
  std::vector<BigInt> completed() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct TransferResult {
  /// counts[n-1] = a_n.
  std::vector<BigInt> counts;
  /// Largest signature table seen over all widths.
  std::size_t peak_table_size = 0;
};

/// a_1..a_{n_max} for tile width w. Throws ResourceLimitError carrying the
/// exact prefix when the memory budget is exceeded. `prune` and `on_cell`
/// apply to the cell scan only.
TransferResult TmCountDetailed(int w, int n_max, const TransferOptions& options = {});
std::vector<BigInt> TmCount(int w, int n_max, const TransferOptions& options = {});

}  // namespace tilecount
