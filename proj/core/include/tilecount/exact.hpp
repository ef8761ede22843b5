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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tilecount/errors.hpp"

namespace tilecount {

// Counts and coefficients are GMP integers/rationals. mpq_class keeps itself
// canonical (lowest terms, positive denominator) after every arithmetic op.
using BigInt = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. mpq_class's two-argument constructor does not
/// reduce, and GMP arithmetic expects reduced operands.
Rational MakeRational(const BigInt& num, const BigInt& den);

BigInt ParseBigInt(std::string_view text);
/// Accepts "p/q" or an integer.
Rational ParseRational(std::string_view text);
std::string ToString(const BigInt& v);
std::string ToString(const Rational& v);

/// C(m, k); zero outside 0 <= k <= m.
BigInt Binomial(std::int64_t m, std::int64_t k);
BigInt Factorial(unsigned k);

/// Signed Stirling numbers of the first kind s(k, i):
///   (x)_k = x (x-1) ... (x-k+1) = sum_i s(k, i) x^i,  s(3,1) = 2, s(3,2) = -3.
BigInt StirlingFirst(int k, int i);
/// Stirling numbers of the second kind S(k, i).
BigInt StirlingSecond(int k, int i);

/// Dense polynomial in one variable over Q; coefficient i multiplies x^i.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial Constant(const Rational& c);
  /// x - root
  static Polynomial Linear(const Rational& root);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Zero past the degree.
  Rational coefficient(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  Rational Evaluate(const Rational& x) const { return (*this)(x); }

  /// p(a*x + b)
  Polynomial Compose(const Rational& a, const Rational& b) const;
  /// Exact division by (x - root); throws DomainError on a nonzero remainder.
  Polynomial DivideByLinear(const Rational& root) const;
  /// Coefficient sequence reversed to length degree()+1.
  Polynomial Reversed() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Human form, highest power first: "41/3 w^3 - 41/2 w^2 + 53/6 w - 1".
  std::string ToString(std::string_view var = "w") const;

 private:
  void Trim();
  std::vector<Rational> coeffs_;
};

/// p_n(w) = sum_{k=1}^{n} a[k-1] * C(w-1, k-1).
struct BinomialRep {
  std::vector<BigInt> a;

  int n() const { return static_cast<int>(a.size()); }
  /// Exact value at integer w >= 1.
  BigInt Evaluate(std::int64_t w) const;
  friend bool operator==(const BinomialRep&, const BinomialRep&) = default;
};

/// C(w-1, j) as a polynomial in w.
Polynomial ShiftedBinomialPolynomial(int j);

Polynomial MonomialFromBinomial(const BinomialRep& rep);
/// Throws NotACountPolynomial when a coefficient is not an integer.
BinomialRep BinomialFromMonomial(const Polynomial& p);

// Same conversions through Stirling numbers:
//   b_i = sum_{k>=i} s(k+1, i+1) / k! * a_{k+1}
//   a_i = (i-1)! * sum_k S(k+1, i) * b_k
Polynomial MonomialFromBinomialStirling(const BinomialRep& rep);
BinomialRep BinomialFromMonomialStirling(const Polynomial& p);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Gaussian elimination over Q with partial pivoting on nonzero entries.
std::vector<Rational> SolveExactLinear(RationalMatrix matrix,
                                       std::vector<Rational> rhs);

/// Integer matrix determinant (Bareiss fraction-free elimination).
BigInt Determinant(std::vector<std::vector<BigInt>> m);

/// Interpolating polynomial of degree < size through (x_i, y_i).
Polynomial Interpolate(const std::vector<Rational>& xs,
                       const std::vector<Rational>& ys);

}  // namespace tilecount
