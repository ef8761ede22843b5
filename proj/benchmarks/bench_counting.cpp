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

#include <benchmark/benchmark.h>

#include "tilecount/brick3d.hpp"
#include "tilecount/flat.hpp"
#include "tilecount/flat_transfer.hpp"

namespace tc = tilecount;

namespace {

void BM_FlatBrute(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(tc::CountFlatSeries(w, n));
}
BENCHMARK(BM_FlatBrute)->Args({2, 9})->Args({3, 7})->Args({5, 6})->Unit(benchmark::kMillisecond);

void BM_CellScan(benchmark::State& state) {
  tc::TransferOptions opt;
  opt.method = tc::TransferOptions::Method::kCellScan;
  opt.prune = state.range(2) != 0;
  const int w = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  std::size_t peak = 0;
  for (auto _ : state) peak = tc::TmCountDetailed(w, n, opt).peak_table_size;
  state.counters["peak_states"] = static_cast<double>(peak);
}
BENCHMARK(BM_CellScan)
    ->Args({2, 12, 1})
    ->Args({2, 12, 0})
    ->Args({3, 9, 1})
    ->Args({4, 7, 1})
    ->Unit(benchmark::kMillisecond);

void BM_RowTransfer(benchmark::State& state) {
  tc::TransferOptions opt;
  opt.method = tc::TransferOptions::Method::kRowTransfer;
  opt.threads = static_cast<int>(state.range(2));
  const int w = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  std::size_t peak = 0;
  for (auto _ : state) peak = tc::TmCountDetailed(w, n, opt).peak_table_size;
  state.counters["peak_states"] = static_cast<double>(peak);
}
BENCHMARK(BM_RowTransfer)
    ->Args({4, 8, 1})
    ->Args({6, 7, 1})
    ->Args({10, 6, 1})
    ->Args({6, 7, 2})
    ->Unit(benchmark::kMillisecond);

void BM_Buildings(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tc::CountBuildingsSeries(n));
}
BENCHMARK(BM_Buildings)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BuildingsOrbitDedup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tc::CountBuildingsByOrbitDedup(n));
}
BENCHMARK(BM_BuildingsOrbitDedup)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
