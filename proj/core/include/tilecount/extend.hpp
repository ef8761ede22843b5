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
#include <utility>
#include <vector>

#include "tilecount/exact.hpp"
#include "tilecount/series.hpp"

namespace tilecount {

/// sum_{i=0}^{K} Q_i(x) (x d/dx)^i F(x) = P(x), with Q_K(0) = 1. F is the
/// series sum_{n>=1} a_n x^n (no constant term).
struct DifferentialApproximant {
  int order = 1;
  std::vector<int> q_degrees;  // K+1 entries
  int p_degree = 0;
  std::vector<std::vector<Rational>> q;
  std::vector<Rational> p;
  /// Series coefficients f_0..f_{terms_used-1} fixed the fit.
  int terms_used = 0;
  int num_unknowns() const;
};

/// Unknown count for the given shape.
int ApproximantUnknowns(const std::vector<int>& q_degrees, int p_degree);

/// Exact fit through the first ApproximantUnknowns() coefficients of
/// F = sum a_n x^n. Throws SingularMatrixError when unavailable, DomainError
/// when there are too few exact terms.
DifferentialApproximant FitApproximant(const CountSeries& s, int order,
                                       const std::vector<int>& q_degrees, int p_degree);
/// Coefficients f_start .. f_{start+num_new-1} from the implied recurrence,
/// seeded with the exact prefix of `s`. start defaults to the number of exact
/// terms. Throws DomainError on a vanishing pivot.
std::vector<Rational> RecurrenceForward(const DifferentialApproximant& a, const CountSeries& s,
                                        int num_new, std::optional<int> start = std::nullopt);

struct EnsembleSpec {
  std::vector<int> orders{1, 2};
  int max_p_degree = 3;
  /// Q_i degrees stay within this distance of Q_0's.
  int degree_spread = 1;
  /// Fraction of available terms an approximant must consume.
  double min_usage = 0.85;
  double max_usage = 1.0;
  int min_fits = 8;
  /// Per predicted index, drop values further than this many MADs from the median.
  double mad_factor = 10.0;
  /// Stop appending once sigma/|mean| exceeds this (0 disables).
  double max_relative_sigma = 3e-6;
  int min_exact_terms = 12;
  int threads = 1;
};

struct PredictionEntry {
  int n = 0;
  double mean = 0;
  double sigma = 0;
  int count = 0;
};

struct PredictionEnsemble {
  std::vector<PredictionEntry> entries;
  int fits_attempted = 0;
  int fits_used = 0;
};

/// Appends up to num_new predicted terms after the exact prefix (any
/// predicted terms already in `s` are replaced). Throws DomainError when fewer
/// than min_fits approximants succeed.
std::pair<CountSeries, PredictionEnsemble> ExtendSeries(const CountSeries& s, int num_new,
                                                        const EnsembleSpec& spec = {});

struct HoldoutResult {
  int dropped = 0;
  /// Per dropped term: true value, prediction, sigma.
  std::vector<BigInt> truth;
  std::vector<PredictionEntry> predictions;
  /// Every dropped term lies within 3 sigma.
  bool within_3sigma = false;
};
/// Drops the last m exact terms and predicts them (precision stop disabled).
HoldoutResult Holdout(const CountSeries& s, int m, EnsembleSpec spec = {});

}  // namespace tilecount
