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

#include "tilecount/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace tilecount {
namespace {

// Predicted terms enter as the exact value of their double.
Rational TermValue(const SeriesTerm& t) { return t.is_exact() ? t.exact : Rational(t.predicted); }

struct ExactRatio {
  int n;
  Rational r;
  bool predicted;
};

std::vector<ExactRatio> ExactRatios(const CountSeries& s) {
  std::vector<ExactRatio> out;
  for (int n = 2; n <= s.size(); ++n) {
    Rational prev = TermValue(s.term(n - 1));
    if (prev == 0) throw DomainError("zero term a_" + std::to_string(n - 1) + " in ratio");
    out.push_back({n, TermValue(s.term(n)) / prev, !s.term(n).is_exact() || !s.term(n - 1).is_exact()});
  }
  return out;
}

Real Pow(Real x, int k) { return std::pow(x, static_cast<Real>(k)); }

Rational RationalFromReal(Real x) {
  // Exact: a long double is a 64-bit integer times a power of two.
  int exp = 0;
  Real m = std::frexp(x, &exp);
  auto mant = static_cast<long long>(std::ldexp(m, 63));
  Rational q{BigInt(static_cast<long>(mant))};
  if (exp - 63 >= 0) {
    q *= Rational(BigInt(1) << static_cast<mp_bitcnt_t>(exp - 63));
  } else {
    q /= Rational(BigInt(1) << static_cast<mp_bitcnt_t>(63 - exp));
  }
  return q;
}

}  // namespace

Real EstimatorTrace::terminal() const {
  return points.empty() ? std::numeric_limits<Real>::quiet_NaN() : points.back().value;
}

EstimatorTrace Ratios(const CountSeries& s) {
  EstimatorTrace t{"ratio", {}};
  for (const ExactRatio& r : ExactRatios(s)) {
    t.points.push_back({r.n, ToLongDouble(r.r), 1.0L / r.n, r.predicted});
  }
  return t;
}

EstimatorTrace LinearIntercepts(const CountSeries& s) {
  EstimatorTrace t{"intercept", {}};
  auto rs = ExactRatios(s);
  for (std::size_t i = 1; i < rs.size(); ++i) {
    const int n = rs[i].n;
    Rational l = Rational(n) * rs[i].r - Rational(n - 1) * rs[i - 1].r;
    t.points.push_back({n, ToLongDouble(l), 1.0L / (Real(n) * n), rs[i].predicted || rs[i - 1].predicted});
  }
  return t;
}

EstimatorTrace ExponentEstimates(const CountSeries& s, Real mu) {
  if (!(mu > 0)) throw DomainError("mu must be positive");
  EstimatorTrace t{"exponent", {}};
  Rational m = RationalFromReal(mu);
  for (const ExactRatio& r : ExactRatios(s)) {
    Rational g = Rational(r.n) * (r.r / m - 1);
    t.points.push_back({r.n, ToLongDouble(g), 1.0L / r.n, r.predicted});
  }
  return t;
}

EstimatorTrace RefinedMu(const CountSeries& s, int order) {
  if (order != 1 && order != 2) throw DomainError("refined mu order must be 1 or 2");
  EstimatorTrace t{order == 1 ? "refined_mu1" : "refined_mu2", {}};
  auto rs = ExactRatios(s);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const int n = rs[i].n;
    if (order == 1) {
      Rational v = Rational(n) * rs[i].r / Rational(n - 1);
      t.points.push_back({n, ToLongDouble(v), 1.0L / (Real(n) * n), rs[i].predicted});
    } else {
      if (i == 0 || n < 3) continue;
      Rational nn(n);
      Rational v = nn * nn * nn * rs[i].r / ((nn - 1) * (2 * nn - 1)) -
                   (nn - 1) * (nn - 1) * (nn - 1) * rs[i - 1].r / ((nn - 2) * (2 * nn - 1));
      t.points.push_back({n, ToLongDouble(v), 1.0L / (Real(n) * n * n),
                          rs[i].predicted || rs[i - 1].predicted});
    }
  }
  return t;
}

EstimatorTrace C1Estimates(const CountSeries& s, Real mu) {
  if (!(mu > 0)) throw DomainError("mu must be positive");
  EstimatorTrace t{"c1", {}};
  Rational m = RationalFromReal(mu);
  for (const ExactRatio& r : ExactRatios(s)) {
    Rational nn(r.n);
    Rational c = (r.r / m - 1 + 1 / nn) * nn * nn;
    t.points.push_back({r.n, ToLongDouble(c), 1.0L / Pow(r.n, 5), r.predicted});
  }
  return t;
}

Real ExtrapolateToZero(const EstimatorTrace& t, int order) {
  const int len = static_cast<int>(t.points.size());
  if (order < 0 || order + 1 > len) throw DomainError("not enough points to extrapolate");
  std::vector<Real> x, p;
  for (int i = len - order - 1; i < len; ++i) {
    x.push_back(t.points[static_cast<std::size_t>(i)].abscissa);
    p.push_back(t.points[static_cast<std::size_t>(i)].value);
  }
  for (int k = 1; k <= order; ++k) {
    for (int i = 0; i + k <= order; ++i) {
      p[static_cast<std::size_t>(i)] =
          (x[static_cast<std::size_t>(i + k)] * p[static_cast<std::size_t>(i)] -
           x[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(i + 1)]) /
          (x[static_cast<std::size_t>(i + k)] - x[static_cast<std::size_t>(i)]);
    }
  }
  return p[0];
}

std::vector<AsymptoticFit> FitRatioExpansion(const CountSeries& s, int num_corrections, Real g) {
  if (num_corrections < 1 || num_corrections > 3) throw DomainError("1 to 3 correction terms");
  auto rs = ExactRatios(s);
  const int k = num_corrections + 1;
  const Rational gq = RationalFromReal(g);
  std::vector<AsymptoticFit> fits;
  for (int end = k; end <= static_cast<int>(rs.size()); ++end) {
    // Unknowns mu, mu c1, ..., linear in the ratios.
    RationalMatrix m;
    std::vector<Rational> rhs;
    for (int i = end - k; i < end; ++i) {
      Rational inv(1, rs[static_cast<std::size_t>(i)].n);
      std::vector<Rational> row{1 + gq * inv};
      Rational p = inv * inv;
      for (int j = 0; j < num_corrections; ++j, p *= inv) row.push_back(p);
      m.push_back(std::move(row));
      rhs.push_back(rs[static_cast<std::size_t>(i)].r);
    }
    std::vector<Rational> x;
    try {
      x = SolveExactLinear(std::move(m), std::move(rhs));
    } catch (const SingularMatrixError&) {
      continue;
    }
    AsymptoticFit f;
    f.n_last = rs[static_cast<std::size_t>(end - 1)].n;
    f.mu = ToLongDouble(x[0]);
    f.g = g;
    if (x[0] != 0) {
      f.c1 = ToLongDouble(x[1] / x[0]);
      if (num_corrections >= 2) f.c2 = ToLongDouble(x[2] / x[0]);
      if (num_corrections >= 3) f.c3 = ToLongDouble(x[3] / x[0]);
    }
    fits.push_back(f);
  }
  return fits;
}

std::vector<AsymptoticFit> FitRatioExpansionFreeExponent(const CountSeries& s, int num_corrections) {
  if (num_corrections < 1 || num_corrections > 3) throw DomainError("1 to 3 correction terms");
  auto rs = ExactRatios(s);
  const int k = num_corrections + 2;
  std::vector<AsymptoticFit> fits;
  for (int end = k; end <= static_cast<int>(rs.size()); ++end) {
    RationalMatrix m;
    std::vector<Rational> rhs;
    for (int i = end - k; i < end; ++i) {
      Rational inv(1, rs[static_cast<std::size_t>(i)].n);
      std::vector<Rational> row;
      Rational p = 1;
      for (int j = 0; j < k; ++j, p *= inv) row.push_back(p);
      m.push_back(std::move(row));
      rhs.push_back(rs[static_cast<std::size_t>(i)].r);
    }
    std::vector<Rational> x;
    try {
      x = SolveExactLinear(std::move(m), std::move(rhs));
    } catch (const SingularMatrixError&) {
      continue;
    }
    if (x[0] == 0) continue;
    AsymptoticFit f;
    f.n_last = rs[static_cast<std::size_t>(end - 1)].n;
    f.mu = ToLongDouble(x[0]);
    f.g = ToLongDouble(x[1] / x[0]);
    f.c1 = ToLongDouble(x[2] / x[0]);
    if (num_corrections >= 2) f.c2 = ToLongDouble(x[3] / x[0]);
    if (num_corrections >= 3) f.c3 = ToLongDouble(x[4] / x[0]);
    fits.push_back(f);
  }
  return fits;
}

AsymptoticFit Headline(const std::vector<AsymptoticFit>& fits) {
  if (fits.empty()) throw DomainError("no ratio fits available");
  AsymptoticFit h = fits.back();
  const std::size_t from = fits.size() >= 3 ? fits.size() - 3 : 0;
  for (std::size_t i = from; i < fits.size(); ++i) {
    h.mu_uncertainty = std::max(h.mu_uncertainty, std::fabs(fits[i].mu - h.mu));
    h.g_uncertainty = std::max(h.g_uncertainty, std::fabs(fits[i].g - h.g));
  }
  return h;
}

EstimatorTrace FitTrace(const std::vector<AsymptoticFit>& fits, const std::string& name) {
  EstimatorTrace t{name, {}};
  for (const AsymptoticFit& f : fits) t.points.push_back({f.n_last, f.mu, 1.0L / Pow(f.n_last, 4), false});
  return t;
}

AmplitudeEstimate Amplitude(const CountSeries& s, Real mu, Real g, int order) {
  if (!(mu > 0)) throw DomainError("mu must be positive");
  AmplitudeEstimate a;
  a.trace.name = "amplitude";
  const Real log_mu = std::log(mu);
  for (int n = 1; n <= s.size(); ++n) {
    const SeriesTerm& t = s.term(n);
    Real v = t.approx();
    if (!(v > 0)) continue;
    Real an = std::exp(std::log(v) - g * std::log(static_cast<Real>(n)) - n * log_mu);
    a.trace.points.push_back({n, an, 1.0L / n, !t.is_exact()});
  }
  a.coefficient_amplitude = ExtrapolateToZero(a.trace, order);
  a.uncertainty = order > 0 ? std::fabs(a.coefficient_amplitude - ExtrapolateToZero(a.trace, order - 1))
                            : 0;
  if (std::fabs(g + 1) < 1e-12L) {
    a.gf_amplitude = -a.coefficient_amplitude;
  } else {
    a.gf_amplitude = a.coefficient_amplitude * std::tgamma(1 + g);
  }
  return a;
}

LogConvexity LogConvexityBound(const CountSeries& s) {
  std::vector<Rational> a = s.ExactValues();
  if (a.size() < 3) throw DomainError("log-convexity needs 3 exact terms");
  LogConvexity r;
  r.log_convex = true;
  r.differences_increasing = true;
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    Rational d = a[i - 1] * a[i + 1] - a[i] * a[i];
    if (d.get_den() != 1) throw DomainError("log-convexity expects integer terms");
    r.differences.push_back(d.get_num());
    if (d <= 0) r.log_convex = false;
    if (r.differences.size() >= 2 && !(r.differences.back() > r.differences[r.differences.size() - 2])) {
      r.differences_increasing = false;
    }
  }
  r.lower_bound = ToLongDouble(a.back() / a[a.size() - 2]);
  return r;
}

HankelReport HankelDiagnostic(const CountSeries& s) {
  std::vector<BigInt> a = s.ExactCounts();
  HankelReport r;
  for (int shift = 0; shift <= 1; ++shift) {
    auto& dets = shift == 0 ? r.dets_shift0 : r.dets_shift1;
    for (int k = 1; 2 * k - 1 + shift <= static_cast<int>(a.size()); ++k) {
      std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(k), std::vector<BigInt>(static_cast<std::size_t>(k)));
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(i + j + shift)];
      }
      dets.push_back(Determinant(std::move(m)));
      if (dets.back() < 0 && (!r.first_negative || k < r.first_negative->first)) {
        r.first_negative = std::make_pair(k, shift);
      }
    }
  }
  return r;
}

GrowthOfGrowth GrowthOfGrowthAnalysis(const CountSeries& leading,
                                      const std::vector<std::pair<int, Real>>& mu_table,
                                      std::optional<Real> fixed_lambda) {
  GrowthOfGrowth out;
  AsymptoticFit h = Headline(FitRatioExpansion(leading, 2));
  out.lambda = h.mu;
  out.lambda_uncertainty = h.mu_uncertainty;
  out.lambda_used = fixed_lambda.value_or(out.lambda);
  if (mu_table.size() < 2) throw DomainError("growth-of-growth needs two widths");
  Real sy = 0, sx = 0, sxx = 0, sxy = 0;
  const Real cnt = static_cast<Real>(mu_table.size());
  for (const auto& [w, mu] : mu_table) {
    Real y = mu - out.lambda_used * w;
    Real x = 1.0L / w;
    sy += y;
    sx += x;
    sxx += x * x;
    sxy += x * y;
  }
  out.c_linear = sy / cnt;
  Real det = cnt * sxx - sx * sx;
  out.d = (cnt * sxy - sx * sy) / det;
  out.c_corrected = (sy - out.d * sx) / cnt;
  return out;
}

FamilyAnalysis AnalyzeFixedExponent(const CountSeries& s, Real g) {
  FamilyAnalysis a;
  a.fit = Headline(FitRatioExpansion(s, 2, g));
  EstimatorTrace gn = ExponentEstimates(s, a.fit.mu);
  a.exponent = ExtrapolateToZero(gn, 1);
  a.exponent_uncertainty = std::fabs(a.exponent - gn.terminal());
  a.amplitude = Amplitude(s, a.fit.mu, g);
  return a;
}

FamilyAnalysis AnalyzeFreeExponent(const CountSeries& s) {
  FamilyAnalysis a;
  a.fit = Headline(FitRatioExpansionFreeExponent(s, 1));
  a.exponent = a.fit.g;
  a.exponent_uncertainty = a.fit.g_uncertainty;
  a.amplitude = Amplitude(s, a.fit.mu, std::round(2 * a.fit.g) / 2);
  return a;
}

std::string TraceToCsv(const EstimatorTrace& t) {
  std::ostringstream out;
  out.precision(std::numeric_limits<Real>::max_digits10);
  out << "n,abscissa,value,estimator,provenance\r\n";
  for (const TracePoint& p : t.points) {
    out << p.n << ',' << p.abscissa << ',' << p.value << ',' << t.name << ','
        << (p.predicted ? "predicted" : "exact") << "\r\n";
  }
  return out.str();
}

}  // namespace tilecount
