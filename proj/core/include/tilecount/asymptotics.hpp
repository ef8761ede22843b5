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
#include <utility>
#include <vector>

#include "tilecount/exact.hpp"
#include "tilecount/series.hpp"

namespace tilecount {

/// Estimator arithmetic runs in x87 extended precision (64-bit significand).
using Real = long double;

struct TracePoint {
  int n = 0;
  Real value = 0;
  Real abscissa = 0;
  /// Some input term was a prediction.
  bool predicted = false;
};

struct EstimatorTrace {
  std::string name;
  std::vector<TracePoint> points;
  /// Last point's value; NaN when empty.
  Real terminal() const;
};

/// r_n = a_n / a_{n-1}; abscissa 1/n.
EstimatorTrace Ratios(const CountSeries& s);
/// l_n = n r_n - (n-1) r_{n-1}; abscissa 1/n^2.
EstimatorTrace LinearIntercepts(const CountSeries& s);
/// g_n = n (r_n / mu - 1); abscissa 1/n.
EstimatorTrace ExponentEstimates(const CountSeries& s, Real mu);
/// Growth-constant estimators that cancel the 1/n term of the ratios for
/// exponent -1. order 1: n r_n / (n-1), abscissa 1/n^2. order 2 also cancels
/// the 1/n^2 term, abscissa 1/n^3.
EstimatorTrace RefinedMu(const CountSeries& s, int order);
/// (r_n / mu - 1 + 1/n) n^2; abscissa 1/n^5.
EstimatorTrace C1Estimates(const CountSeries& s, Real mu);

/// Neville extrapolation to abscissa 0 through the last order+1 points.
Real ExtrapolateToZero(const EstimatorTrace& t, int order);

struct AsymptoticFit {
  /// Index of the last ratio in the window.
  int n_last = 0;
  Real mu = 0;
  Real g = -1;
  std::optional<Real> c1, c2, c3;
  /// Spread of the last three windows (max deviation from this one); set on
  /// the headline fit only.
  Real mu_uncertainty = 0;
  Real g_uncertainty = 0;
};

/// Sliding windows of num_corrections+1 consecutive ratios solved exactly for
/// r_n = mu (1 + g/n + c1/n^2 + c2/n^3 [+ c3/n^4]) with g fixed.
std::vector<AsymptoticFit> FitRatioExpansion(const CountSeries& s, int num_corrections,
                                             Real g = -1);
/// Same with g free: windows of num_corrections+2 ratios.
std::vector<AsymptoticFit> FitRatioExpansionFreeExponent(const CountSeries& s,
                                                         int num_corrections);
/// The last window, with uncertainties from the last three.
AsymptoticFit Headline(const std::vector<AsymptoticFit>& fits);
EstimatorTrace FitTrace(const std::vector<AsymptoticFit>& fits, const std::string& name);

struct AmplitudeEstimate {
  /// a_n ~ A mu^n n^g
  Real coefficient_amplitude = 0;
  /// Singular amplitude of the generating function: -A for g = -1 (log
  /// singularity), A Gamma(1+g) otherwise (-2 sqrt(pi) A for g = -3/2).
  Real gf_amplitude = 0;
  Real uncertainty = 0;
  EstimatorTrace trace;
};
/// Extrapolates A_n = a_n n^-g / mu^n in 1/n (Neville, `order`).
AmplitudeEstimate Amplitude(const CountSeries& s, Real mu, Real g, int order = 2);

struct LogConvexity {
  bool log_convex = false;
  bool differences_increasing = false;
  /// Last ratio of exact terms.
  Real lower_bound = 0;
  /// a_{n-1} a_{n+1} - a_n^2 for n = 2..N-1.
  std::vector<BigInt> differences;
};
/// Exact terms only.
LogConvexity LogConvexityBound(const CountSeries& s);

struct HankelReport {
  /// dets[k-1] = det[a_{i+j+1+shift}]_{i,j<k}, for shifts 0 and 1.
  std::vector<BigInt> dets_shift0, dets_shift1;
  /// First (order, shift) with a negative determinant.
  std::optional<std::pair<int, int>> first_negative;
};
/// Exact integer terms only.
HankelReport HankelDiagnostic(const CountSeries& s);

struct GrowthOfGrowth {
  /// From the ratio fits on the leading-coefficient series.
  Real lambda = 0;
  Real lambda_uncertainty = 0;
  /// Slope used for the intercept fits.
  Real lambda_used = 0;
  /// mean of mu(w) - lambda w.
  Real c_linear = 0;
  /// mu(w) - lambda w = c + d / w, least squares.
  Real c_corrected = 0;
  Real d = 0;
};
/// `fixed_lambda` replaces the fitted slope in the intercept fits when given.
GrowthOfGrowth GrowthOfGrowthAnalysis(const CountSeries& leading,
                                      const std::vector<std::pair<int, Real>>& mu_table,
                                      std::optional<Real> fixed_lambda = std::nullopt);

struct FamilyAnalysis {
  AsymptoticFit fit;
  /// Extrapolated exponent and its spread.
  Real exponent = 0;
  Real exponent_uncertainty = 0;
  AmplitudeEstimate amplitude;
};
/// Exponent -1 pipeline: 2-correction ratio fits for mu, g_n extrapolated
/// linearly in 1/n, amplitude at g = -1.
FamilyAnalysis AnalyzeFixedExponent(const CountSeries& s, Real g = -1);
/// mu and g fitted jointly (1 correction term), amplitude at the fitted g
/// rounded to the nearest half-integer.
FamilyAnalysis AnalyzeFreeExponent(const CountSeries& s);

/// RFC 4180, header `n,abscissa,value,estimator,provenance`.
std::string TraceToCsv(const EstimatorTrace& t);

}  // namespace tilecount
