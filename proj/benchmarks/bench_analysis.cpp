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

#include "tilecount/asymptotics.hpp"
#include "tilecount/exact.hpp"
#include "tilecount/extend.hpp"
#include "tilecount/flat_transfer.hpp"
#include "tilecount/typepoly.hpp"

namespace tc = tilecount;

namespace {

// Self-computed w=2 counts so the benchmarks need no data files.
const tc::CountSeries& W2() {
  static const tc::CountSeries s =
      tc::CountSeries::FromCounts("flat-w2", 2, tc::TmCount(2, 14), "flat-transfer");
  return s;
}

void BM_RatioFit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tc::AnalyzeFixedExponent(W2()));
}
BENCHMARK(BM_RatioFit)->Unit(benchmark::kMicrosecond);

void BM_Hankel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tc::HankelDiagnostic(W2()));
}
BENCHMARK(BM_Hankel)->Unit(benchmark::kMicrosecond);

void BM_ExtendSeries(benchmark::State& state) {
  tc::EnsembleSpec spec;
  spec.max_relative_sigma = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tc::ExtendSeries(W2(), 3, spec));
}
BENCHMARK(BM_ExtendSeries)->Unit(benchmark::kMillisecond);

void BM_BasisConversion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  tc::BinomialRep rep;
  for (int k = 1; k <= n; ++k) rep.a.push_back(tc::Binomial(3 * n, k));
  for (auto _ : state) {
    auto p = state.range(1) ? tc::MonomialFromBinomialStirling(rep) : tc::MonomialFromBinomial(rep);
    benchmark::DoNotOptimize(tc::BinomialFromMonomial(p));
  }
}
BENCHMARK(BM_BasisConversion)->Args({14, 0})->Args({14, 1})->Args({30, 0})->Args({30, 1});

void BM_PolynomialFit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::pair<int, tc::BigInt>> values;
  for (int w = 1; w <= n + 1; ++w) values.emplace_back(w, tc::PyramidCount(n, w));
  for (auto _ : state) benchmark::DoNotOptimize(tc::FitPolynomial(n, values, false));
}
BENCHMARK(BM_PolynomialFit)->Arg(8)->Arg(14)->Arg(20);

}  // namespace
