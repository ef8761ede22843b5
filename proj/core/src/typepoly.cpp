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

#include "tilecount/typepoly.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace tilecount {
namespace {

int FloorDiv(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
int Mod(int a, int b) { return ((a % b) + b) % b; }

std::string Join(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Rational Sign(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

std::vector<int> NormalizeResidues(const std::vector<int>& raw) {
  std::vector<int> distinct = raw;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> out;
  out.reserve(raw.size());
  for (int r : raw) {
    out.push_back(static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), r) -
                                   distinct.begin()));
  }
  return out;
}

TypeSignature ClassifyOffsets(const OffsetSequence& b, int w) {
  if (w < 1) throw DomainError("tile width must be positive");
  TypeSignature t;
  std::vector<int> raw;
  for (int x : b) {
    raw.push_back(Mod(x, w));
    t.q.push_back(FloorDiv(x, w));
  }
  t.residues = NormalizeResidues(raw);
  t.k = t.residues.empty() ? 0 : 1 + *std::max_element(t.residues.begin(), t.residues.end());
  return t;
}

TypeSignature Classify(const FlatStructure& s) { return ClassifyOffsets(Offsets(s), s.w); }

std::vector<BigInt> TypeCoefficients(int n, int k_max, EnumerationLimits limits) {
  if (n < 1 || k_max < 1) throw DomainError("n and k_max must be positive");
  std::vector<BigInt> a;
  for (int k = 1; k <= k_max; ++k) {
    if (k > n) {
      a.emplace_back(0);
      continue;
    }
    a.push_back(CountFlatByComplexity(k, n, limits)[static_cast<std::size_t>(k - 1)]);
  }
  return a;
}

BigInt TypeMultiplicityReport::Total() const {
  BigInt total = 0;
  for (std::size_t i = 0; i < types_by_k.size(); ++i) {
    total += BigInt(static_cast<unsigned long>(types_by_k[i])) *
             Binomial(w - 1, static_cast<std::int64_t>(i));
  }
  return total;
}

TypeMultiplicityReport TypeMultiplicityCheck(int n, int w, EnumerationLimits limits) {
  std::map<TypeSignature, std::uint64_t> groups;
  EnumerateFlat(w, n, [&](const FlatStructure& s) { ++groups[Classify(s)]; }, limits);
  TypeMultiplicityReport r;
  r.n = n;
  r.w = w;
  r.types_by_k.assign(static_cast<std::size_t>(n), 0);
  r.structures_by_k.assign(static_cast<std::size_t>(n), 0);
  for (const auto& [type, count] : groups) {
    r.types_by_k[static_cast<std::size_t>(type.k - 1)] += 1;
    r.structures_by_k[static_cast<std::size_t>(type.k - 1)] += count;
    BigInt expect = Binomial(w - 1, type.k - 1);
    if (expect != static_cast<unsigned long>(count)) {
      r.failures.push_back("type residues=" + Join(type.residues) + " q=" + Join(type.q) +
                           " has " + std::to_string(count) + " structures, expected " +
                           expect.get_str());
    }
  }
  return r;
}

std::string_view ToString(PolynomialSource s) {
  switch (s) {
    case PolynomialSource::kFittedFromCounts:
      return "fitted-from-counts";
    case PolynomialSource::kFittedWithSymmetry:
      return "fitted-with-symmetry";
    case PolynomialSource::kFixture:
      return "fixture";
  }
  return "?";
}

PolynomialFamily MakeFamily(int n, Polynomial monomial, PolynomialSource source) {
  PolynomialFamily f;
  f.n = n;
  f.binomial = BinomialFromMonomial(monomial);
  f.binomial.a.resize(static_cast<std::size_t>(n), 0);
  f.monomial = std::move(monomial);
  f.source = source;
  return f;
}

PolynomialFamily FitPolynomial(int n, const std::vector<std::pair<int, BigInt>>& values,
                               bool use_symmetry) {
  if (n < 1) throw DomainError("n must be positive");
  std::map<int, Rational> points;
  auto add = [&](int x, const Rational& y) {
    auto [it, fresh] = points.emplace(x, y);
    if (!fresh && it->second != y) {
      throw DomainError("conflicting values at w=" + std::to_string(x));
    }
  };
  for (const auto& [w, v] : values) {
    add(w, Rational(v));
    if (use_symmetry) add(1 - w, Sign(n - 1) * Rational(v));
  }
  if (static_cast<int>(points.size()) < n) {
    throw DomainError("need " + std::to_string(n) + " distinct points for p_" +
                      std::to_string(n) + ", have " + std::to_string(points.size()));
  }
  std::vector<Rational> xs, ys;
  for (const auto& [x, y] : points) {
    if (static_cast<int>(xs.size()) == n) break;
    xs.emplace_back(x);
    ys.push_back(y);
  }
  Polynomial p = Interpolate(xs, ys);
  for (const auto& [x, y] : points) {
    if (p(Rational(x)) != y) {
      throw DomainError("point w=" + std::to_string(x) + " disagrees with the degree-" +
                        std::to_string(n - 1) + " fit");
    }
  }
  if (p.degree() != n - 1) {
    throw DomainError("fitted degree " + std::to_string(p.degree()) + ", expected " +
                      std::to_string(n - 1));
  }
  return MakeFamily(n, std::move(p),
                    use_symmetry ? PolynomialSource::kFittedWithSymmetry
                                 : PolynomialSource::kFittedFromCounts);
}

BigInt PyramidCount(int n, int w) {
  if (n < 1 || w < 1) throw DomainError("n and w must be positive");
  return Binomial(static_cast<std::int64_t>(w) * n - 1, n - 1);
}

PolynomialFamily PyramidPolynomial(int n) {
  if (n < 1) throw DomainError("n must be positive");
  // n^(n-1)/(n-1)! * prod_{i=1}^{n-1} (w - i/n)
  Polynomial p = Polynomial::Constant(MakeRational(1, Factorial(static_cast<unsigned>(n - 1))));
  for (int i = 1; i < n; ++i) {
    p = p * Polynomial::Linear(MakeRational(i, n));
    p *= Rational(n);
  }
  return MakeFamily(n, std::move(p), PolynomialSource::kFittedFromCounts);
}

std::vector<IdentityCheck> IdentitySuite(const PolynomialFamily& f) {
  const int n = f.n;
  const auto& a = f.binomial.a;
  const Polynomial& p = f.monomial;
  auto A = [&](int k) -> Rational {
    return (k >= 1 && k <= static_cast<int>(a.size())) ? Rational(a[static_cast<std::size_t>(k - 1)])
                                                      : Rational(0);
  };
  std::vector<IdentityCheck> out;
  {
    Rational s = 0;
    // p_n(0) read off the binomial basis: C(-1, k-1) = (-1)^(k-1).
    for (int k = 1; k <= n; ++k) s += Sign(k - 1) * A(k);
    out.push_back({"sum of (-1)^(k-1) a_{n,k} is (-1)^(n+1)", s == Sign(n + 1),
                   "sum = " + s.get_str()});
  }
  if (n >= 2) {
    Rational rhs = MakeRational(n - 1, 2) * A(n);
    out.push_back({"a_{n,n-1} = (n-1)/2 a_{n,n}", A(n - 1) == rhs,
                   A(n - 1).get_str() + " vs " + rhs.get_str()});
  } else {
    out.push_back({"a_{n,n-1} = (n-1)/2 a_{n,n}", true, "vacuous for n=1"});
  }
  out.push_back({"b_{n,0} = (-1)^(n-1)", p.coefficient(0) == Sign(n - 1),
                 "b_0 = " + p.coefficient(0).get_str()});
  {
    Rational s = 0;
    for (const Rational& c : p.coefficients()) s += c;
    out.push_back({"sum of b_{n,i} is 1", s == 1, "sum = " + s.get_str()});
  }
  if (n >= 2) {
    Rational rhs = -MakeRational(n - 1, 2) * p.coefficient(n - 1);
    out.push_back({"b_{n,n-2} = -(n-1)/2 b_{n,n-1}", p.coefficient(n - 2) == rhs,
                   p.coefficient(n - 2).get_str() + " vs " + rhs.get_str()});
  } else {
    out.push_back({"b_{n,n-2} = -(n-1)/2 b_{n,n-1}", true, "vacuous for n=1"});
  }
  {
    Polynomial reflected = p.Compose(Rational(-1), Rational(1));
    Polynomial expect = p * Sign(n - 1);
    out.push_back({"p(1-w) = (-1)^(n-1) p(w)", reflected == expect,
                   reflected == expect ? "holds" : "p(1-w) = " + reflected.ToString()});
  }
  return out;
}

bool AllPassed(const std::vector<IdentityCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

bool IsPalindromic(const Polynomial& p, int degree) {
  for (int i = 0; i <= degree; ++i) {
    if (p.coefficient(i) != p.coefficient(degree - i)) return false;
  }
  return p.degree() <= degree;
}

bool IsWeaklyUnimodal(const Polynomial& p) {
  const auto& c = p.coefficients();
  std::size_t i = 1;
  while (i < c.size() && c[i] >= c[i - 1]) ++i;
  while (i < c.size() && c[i] <= c[i - 1]) ++i;
  return i >= c.size();
}

GFNumerator GfNumerator(const PolynomialFamily& f) {
  const int n = f.n;
  const int len = 2 * n;
  // Series coefficients p(1), p(2), ..., then multiply by (1-x)^n.
  std::vector<Rational> c;
  for (int w = 1; w <= len; ++w) c.push_back(f.monomial(Rational(w)));
  for (int r = 0; r < n; ++r) {
    for (int i = len - 1; i >= 1; --i) c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - 1)];
  }
  for (int i = n; i < len; ++i) {
    if (c[static_cast<std::size_t>(i)] != 0) {
      throw DomainError("numerator does not terminate: coefficient of x^" + std::to_string(i) +
                        " is " + c[static_cast<std::size_t>(i)].get_str());
    }
  }
  c.resize(static_cast<std::size_t>(n));
  GFNumerator g;
  g.n = n;
  g.a = Polynomial(c);
  g.degree_ok = g.a.degree() == n - 1;
  g.palindromic = IsPalindromic(g.a, n - 1);
  g.unimodal = IsWeaklyUnimodal(g.a);
  g.reciprocity = g.a.Reversed() == g.a && g.degree_ok;
  if (n % 2 == 0) {
    g.even_factor_ok = false;
    g.even_factor_unimodal = false;
    try {
      Polynomial b = g.a.DivideByLinear(Rational(-1));
      g.even_factor_ok = b.degree() == n - 2 && IsPalindromic(b, n - 2);
      g.even_factor_unimodal = IsWeaklyUnimodal(b);
      g.even_factor = std::move(b);
    } catch (const DomainError&) {
    }
  }
  return g;
}

std::vector<Rational> LeadingCoefficientSeries(const std::vector<PolynomialFamily>& families) {
  std::vector<Rational> out;
  for (const PolynomialFamily& f : families) out.push_back(f.monomial.coefficient(f.n - 1));
  return out;
}

std::string PolynomialToJson(const PolynomialFamily& f) {
  nlohmann::ordered_json j;
  j["n"] = f.n;
  j["binomial"] = nlohmann::ordered_json::array();
  for (const BigInt& a : f.binomial.a) j["binomial"].push_back(a.get_str());
  j["monomial"] = nlohmann::ordered_json::array();
  for (const Rational& b : f.monomial.coefficients()) {
    j["monomial"].push_back({b.get_num().get_str(), b.get_den().get_str()});
  }
  j["source"] = std::string(ToString(f.source));
  return j.dump() + "\n";
}

PolynomialFamily PolynomialFromJson(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", e.what());
  }
  PolynomialFamily f;
  try {
    f.n = j.at("n").get<int>();
    for (const auto& a : j.at("binomial")) f.binomial.a.push_back(ParseBigInt(a.get<std::string>()));
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("monomial")) {
      coeffs.push_back(MakeRational(ParseBigInt(c.at(0).get<std::string>()),
                                    ParseBigInt(c.at(1).get<std::string>())));
    }
    f.monomial = Polynomial(std::move(coeffs));
    const std::string src = j.at("source").get<std::string>();
    if (src == "fitted-from-counts") {
      f.source = PolynomialSource::kFittedFromCounts;
    } else if (src == "fitted-with-symmetry") {
      f.source = PolynomialSource::kFittedWithSymmetry;
    } else if (src == "fixture") {
      f.source = PolynomialSource::kFixture;
    } else {
      throw SchemaError("/source", "unknown source '" + src + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("", e.what());
  }
  if (MonomialFromBinomial(f.binomial) != f.monomial) {
    throw SchemaError("/binomial", "does not match the monomial coefficients");
  }
  return f;
}

}  // namespace tilecount
