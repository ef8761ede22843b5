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

#include <optional>
#include <string>
#include <vector>

#include "tilecount/exact.hpp"
#include "tilecount/series.hpp"

namespace tilecount {

/// Directory holding the vendored reference data. $TILECOUNT_DATA_DIR wins
/// over the path compiled in at build time.
std::string FixtureDir();

/// Published flat counts for w = 2..10.
CountSeries LoadFlatFixture(int w);
/// 2x4 brick buildings, n = 1..10 (OEIS A112389).
CountSeries LoadBrickFixture();

struct PolynomialFixture {
  int n = 0;
  Polynomial monomial;
  /// Present for n >= 3.
  std::optional<BinomialRep> binomial;
};
/// p_1..p_14.
std::vector<PolynomialFixture> LoadPolynomialFixtures();

struct GfNumeratorFixture {
  int n = 0;
  /// When set, `poly` is B_n and A_n = (1+x) B_n.
  bool one_plus_x_factor = false;
  Polynomial poly;
  Polynomial Numerator() const;
};
std::vector<GfNumeratorFixture> LoadGfNumeratorFixtures();

struct AsymptoticsRow {
  int w = 0;
  double mu = 0;
  double amplitude = 0;
};
std::vector<AsymptoticsRow> LoadAsymptoticsTable();

struct PredictionRow {
  int n = 0;
  BigInt actual;
  BigInt predicted;
  double fractional_error = 0;
};
/// Published 20-term w=2 extension, n = 21..29.
std::vector<PredictionRow> LoadPredictionTable();

}  // namespace tilecount
