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
#include <string_view>
#include <vector>

#include "tilecount/exact.hpp"

namespace tilecount {

enum class Provenance { kExact, kPredicted };

struct SeriesTerm {
  Provenance provenance = Provenance::kExact;
  /// Set for exact terms (integers for counts, rationals for coefficient series).
  Rational exact;
  /// Set for predicted terms.
  double predicted = 0.0;
  /// Ensemble standard deviation of a predicted term.
  std::optional<double> sigma;

  bool is_exact() const { return provenance == Provenance::kExact; }
  long double approx() const;
  friend bool operator==(const SeriesTerm&, const SeriesTerm&) = default;
};

/// a_1, a_2, ... for one family. Predicted terms only follow exact ones.
struct CountSeries {
  std::string family = "custom";
  std::optional<int> w;
  std::vector<SeriesTerm> terms;
  std::string generator;
  int version = 1;

  static CountSeries FromCounts(std::string family, std::optional<int> w,
                                const std::vector<BigInt>& counts,
                                std::string generator = "tilecount");
  static CountSeries FromRationals(std::string family,
                                   const std::vector<Rational>& values,
                                   std::string generator = "tilecount");

  int size() const { return static_cast<int>(terms.size()); }
  int num_exact() const;
  /// term(n) is a_n, 1-based.
  const SeriesTerm& term(int n) const { return terms.at(n - 1); }
  /// Exact prefix as integers; throws DomainError on a non-integer term.
  std::vector<BigInt> ExactCounts() const;
  std::vector<Rational> ExactValues() const;
  /// Keeps the first n terms.
  CountSeries Truncated(int n) const;
  /// Empty when valid, else the first problem.
  std::string Validate() const;
  friend bool operator==(const CountSeries&, const CountSeries&) = default;
};

/// SeriesFile JSON, keys in schema order, two-space indent, trailing newline.
std::string SeriesToJson(const CountSeries& s);
/// Throws SchemaError naming the offending field.
CountSeries SeriesFromJson(std::string_view text);
CountSeries ReadSeriesFile(const std::string& path);
void WriteSeriesFile(const std::string& path, const CountSeries& s);

long double ToLongDouble(const BigInt& v);
long double ToLongDouble(const Rational& v);

}  // namespace tilecount
