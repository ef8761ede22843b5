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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tilecount/exact.hpp"
#include "tilecount/flat.hpp"

namespace tilecount {

/// Residues b_i mod w relabeled by rank among the distinct residues (so the
/// smallest residue, always that of b_0 = 0, becomes 0), and q_i = floor(b_i / w).
/// Independent of the tile width.
struct TypeSignature {
  std::vector<int> residues;
  std::vector<int> q;
  /// Offset complexity: number of distinct residues.
  int k = 0;
  friend auto operator<=>(const TypeSignature&, const TypeSignature&) = default;
};

/// Rank relabeling: (0,3,3,2) -> (0,2,2,1).
std::vector<int> NormalizeResidues(const std::vector<int>& raw);
TypeSignature ClassifyOffsets(const OffsetSequence& b, int w);
TypeSignature Classify(const FlatStructure& s);

/// a_{n,1..k_max}: structures of width w = k whose offsets hit all k residues.
std::vector<BigInt> TypeCoefficients(int n, int k_max, EnumerationLimits limits = {});

struct TypeMultiplicityReport {
  int n = 0;
  int w = 0;
  /// Index k-1: distinct types of complexity k, and structures carrying them.
  std::vector<std::uint64_t> types_by_k;
  std::vector<std::uint64_t> structures_by_k;
  /// One line per type whose multiplicity differs from C(w-1, k-1).
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  /// sum_k types_by_k * C(w-1, k-1); equals the structure count when ok().
  BigInt Total() const;
};
TypeMultiplicityReport TypeMultiplicityCheck(int n, int w, EnumerationLimits limits = {});

enum class PolynomialSource { kFittedFromCounts, kFittedWithSymmetry, kFixture };
std::string_view ToString(PolynomialSource s);

struct PolynomialFamily {
  int n = 0;
  BinomialRep binomial;
  Polynomial monomial;
  PolynomialSource source = PolynomialSource::kFittedFromCounts;
};

/// Builds the family from monomial coefficients (binomial side derived).
PolynomialFamily MakeFamily(int n, Polynomial monomial, PolynomialSource source);

/// Interpolates p_n through (w, p_n(w)). Without symmetry it needs n distinct
/// w; with it, each w also pins 1-w through p(1-w) = (-1)^(n-1) p(w). Extra
/// points must agree. Throws DomainError on too few or inconsistent points or
/// a degree other than n-1, NotACountPolynomial on non-integral a_{n,k}.
PolynomialFamily FitPolynomial(int n, const std::vector<std::pair<int, BigInt>>& values,
                               bool use_symmetry);

/// C(wn-1, n-1).
BigInt PyramidCount(int n, int w);
PolynomialFamily PyramidPolynomial(int n);

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};
/// The six coefficient identities; every entry is reported.
std::vector<IdentityCheck> IdentitySuite(const PolynomialFamily& f);
bool AllPassed(const std::vector<IdentityCheck>& checks);

struct GFNumerator {
  int n = 0;
  /// sum_{w>=1} p_n(w) x^(w-1) = A(x) / (1-x)^n
  Polynomial a;
  /// B with A = (1+x) B, for even n.
  std::optional<Polynomial> even_factor;
  bool degree_ok = false;
  bool palindromic = false;
  /// Weak unimodality; a failure is a warning only.
  bool unimodal = false;
  /// x^(n-1) A(1/x) = A(x)
  bool reciprocity = false;
  /// Even n: (1+x) divides A and B is palindromic of degree n-2. True for odd n.
  bool even_factor_ok = true;
  bool even_factor_unimodal = true;
};
/// Throws DomainError when the series does not terminate after degree n-1.
GFNumerator GfNumerator(const PolynomialFamily& f);

bool IsPalindromic(const Polynomial& p, int degree);
bool IsWeaklyUnimodal(const Polynomial& p);

/// b_{n,n-1} for each family, in order.
std::vector<Rational> LeadingCoefficientSeries(const std::vector<PolynomialFamily>& families);

/// {"n":..,"binomial":[..],"monomial":[["num","den"],..],"source":..}
std::string PolynomialToJson(const PolynomialFamily& f);
PolynomialFamily PolynomialFromJson(std::string_view text);

}  // namespace tilecount
