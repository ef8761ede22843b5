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

#include "tilecount/exact.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace tilecount {

Rational MakeRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt ParseBigInt(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<long>(start), s.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("not a decimal integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

Rational ParseRational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseBigInt(text));
  BigInt num = ParseBigInt(text.substr(0, slash));
  BigInt den = ParseBigInt(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string ToString(const BigInt& v) { return v.get_str(10); }
std::string ToString(const Rational& v) { return v.get_str(10); }

BigInt Binomial(std::int64_t m, std::int64_t k) {
  if (k < 0 || m < 0 || k > m) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m),
               static_cast<unsigned long>(k));
  return r;
}

BigInt Factorial(unsigned k) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

namespace {

void CheckStirlingRange(int k, int i) {
  if (k < 0 || i < 0 || i > k) {
    throw DomainError("Stirling index out of range: (" + std::to_string(k) +
                      ", " + std::to_string(i) + ")");
  }
}

}  // namespace

// s(k+1, i) = s(k, i-1) - k s(k, i)
BigInt StirlingFirst(int k, int i) {
  CheckStirlingRange(k, i);
  std::vector<BigInt> row{1};
  for (int m = 0; m < k; ++m) {
    std::vector<BigInt> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j + 1] += row[j];
      next[j] -= m * row[j];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(i)];
}

// S(k+1, i) = S(k, i-1) + i S(k, i)
BigInt StirlingSecond(int k, int i) {
  CheckStirlingRange(k, i);
  std::vector<BigInt> row{1};
  for (int m = 0; m < k; ++m) {
    std::vector<BigInt> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j + 1] += row[j];
      next[j] += static_cast<long>(j) * row[j];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(i)];
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  Trim();
}

Polynomial Polynomial::Constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::Linear(const Rational& root) {
  return Polynomial({-root, Rational(1)});
}

void Polynomial::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading term");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial Polynomial::Compose(const Rational& a, const Rational& b) const {
  Polynomial result;
  Polynomial inner({b, a});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result = result * inner + Constant(*it);
  }
  return result;
}

Polynomial Polynomial::DivideByLinear(const Rational& root) const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> q(coeffs_.size() - 1);
  Rational carry = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    Rational cur = coeffs_[i] + carry * root;
    if (i == 0) {
      if (cur != 0) throw DomainError("division by linear factor leaves a remainder");
    } else {
      q[i - 1] = cur;
      carry = cur;
    }
  }
  return Polynomial(std::move(q));
}

Polynomial Polynomial::Reversed() const {
  std::vector<Rational> r(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial(std::move(r));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  Trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  Trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  Trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(r));
}

std::string Polynomial::ToString(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || i == 0) out << mag.get_str();
    if (i > 0) {
      if (!unit) out << ' ';
      out << var;
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------

BigInt BinomialRep::Evaluate(std::int64_t w) const {
  BigInt total = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    total += a[k] * Binomial(w - 1, static_cast<std::int64_t>(k));
  }
  return total;
}

Polynomial ShiftedBinomialPolynomial(int j) {
  // C(w-1, j) = prod_{t=1}^{j} (w - t) / j!
  Polynomial p = Polynomial::Constant(1);
  for (int t = 1; t <= j; ++t) p = p * Polynomial::Linear(t);
  p *= MakeRational(1, Factorial(static_cast<unsigned>(j)));
  return p;
}

Polynomial MonomialFromBinomial(const BinomialRep& rep) {
  Polynomial p;
  for (int k = 0; k < rep.n(); ++k) {
    p += ShiftedBinomialPolynomial(k) * Rational(rep.a[static_cast<std::size_t>(k)]);
  }
  return p;
}

BinomialRep BinomialFromMonomial(const Polynomial& p) {
  // Newton forward differences at w = 1, 2, ...: a_{k+1} = Delta^k p(1).
  int len = std::max(p.degree() + 1, 1);
  std::vector<Rational> diff;
  diff.reserve(static_cast<std::size_t>(len));
  for (int w = 1; w <= len; ++w) diff.push_back(p(Rational(w)));
  BinomialRep rep;
  for (int k = 0; k < len; ++k) {
    const Rational& lead = diff[0];
    if (lead.get_den() != 1) {
      throw NotACountPolynomial("binomial coefficient a_" + std::to_string(k + 1) +
                                " = " + lead.get_str() + " is not an integer");
    }
    rep.a.push_back(lead.get_num());
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  return rep;
}

Polynomial MonomialFromBinomialStirling(const BinomialRep& rep) {
  int n = rep.n();
  std::vector<Rational> b(static_cast<std::size_t>(std::max(n, 0)), 0);
  for (int i = 0; i < n; ++i) {
    for (int k = i; k < n; ++k) {
      b[static_cast<std::size_t>(i)] +=
          MakeRational(StirlingFirst(k + 1, i + 1) * rep.a[static_cast<std::size_t>(k)],
                   Factorial(static_cast<unsigned>(k)));
    }
  }
  return Polynomial(std::move(b));
}

BinomialRep BinomialFromMonomialStirling(const Polynomial& p) {
  int len = std::max(p.degree() + 1, 1);
  BinomialRep rep;
  for (int i = 1; i <= len; ++i) {
    Rational sum = 0;
    for (int k = i - 1; k < len; ++k) sum += StirlingSecond(k + 1, i) * p.coefficient(k);
    sum *= Factorial(static_cast<unsigned>(i - 1));
    if (sum.get_den() != 1) {
      throw NotACountPolynomial("binomial coefficient a_" + std::to_string(i) +
                                " = " + sum.get_str() + " is not an integer");
    }
    rep.a.push_back(sum.get_num());
  }
  return rep;
}

std::vector<Rational> SolveExactLinear(RationalMatrix a, std::vector<Rational> rhs) {
  const std::size_t n = a.size();
  if (rhs.size() != n) throw DomainError("rhs length does not match matrix");
  for (const auto& row : a) {
    if (row.size() != n) throw DomainError("matrix is not square");
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError("singular matrix at column " + std::to_string(col));
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

BigInt Determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Polynomial Interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw DomainError("interpolation points and values differ in length");
  const std::size_t n = xs.size();
  RationalMatrix v(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Rational pw = 1;
    for (std::size_t j = 0; j < n; ++j) {
      v[i][j] = pw;
      pw *= xs[i];
    }
  }
  return Polynomial(SolveExactLinear(std::move(v), ys));
}

}  // namespace tilecount
