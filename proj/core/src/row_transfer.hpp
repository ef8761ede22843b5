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
#include <vector>

#include "tilecount/exact.hpp"

namespace tilecount::detail {

struct RowTransferOptions {
  int threads = 1;
  std::uint64_t memory_budget_bytes = 8ull << 30;
  double time_budget_seconds = 0;
};

struct RowTransferResult {
  std::vector<BigInt> counts;  // counts[n-1] = a_n
  std::size_t peak_table_size = 0;
};

/// Row-at-a-time counter in translation-relative coordinates.
///
/// A state is the tail of the row being built (tiles placed so far,
/// positions relative to the last one) plus the tiles of the row below that
/// a later tile could still overlap, each with a connectivity label. Tables
/// are grouped by the number of tiles placed in the current row, so states
/// reached through different prefixes of the row below merge.
///
/// Throws ResourceLimitError when a table exceeds the memory budget; the
/// partial prefix holds every a_n whose structures were all finished.
RowTransferResult RowTransferCount(int w, int n_max, const RowTransferOptions& options);

/// Largest n_max the key layout supports.
inline constexpr int kRowTransferMaxTiles = 20;

}  // namespace tilecount::detail
