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

#include "tilecount/extend.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace tilecount {
namespace {

struct Shape {
  int order;
  std::vector<int> q_degrees;
  int p_degree;
};

// f_0 = 0, f_n = a_n over the exact prefix.
std::vector<Rational> Coefficients(const CountSeries& s) {
  std::vector<Rational> f{Rational(0)};
  for (const Rational& v : s.ExactValues()) f.push_back(v);
  return f;
}

Rational IntPow(int base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

DifferentialApproximant Fit(const std::vector<Rational>& f, int order,
                            const std::vector<int>& q_degrees, int p_degree) {
  const int unknowns = ApproximantUnknowns(q_degrees, p_degree);
  if (unknowns > static_cast<int>(f.size())) {
    throw DomainError("approximant needs " + std::to_string(unknowns) + " coefficients, have " +
                      std::to_string(f.size()));
  }
  std::vector<std::pair<int, int>> cols;
  for (int i = 0; i <= order; ++i) {
    for (int j = 0; j <= q_degrees[static_cast<std::size_t>(i)]; ++j) {
      if (i == order && j == 0) continue;
      cols.emplace_back(i, j);
    }
  }
  RationalMatrix m(static_cast<std::size_t>(unknowns), std::vector<Rational>(static_cast<std::size_t>(unknowns)));
  std::vector<Rational> rhs(static_cast<std::size_t>(unknowns));
  for (int row = 0; row < unknowns; ++row) {
    auto& r = m[static_cast<std::size_t>(row)];
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto [i, j] = cols[c];
      if (row - j >= 0) r[c] = IntPow(row - j, i) * f[static_cast<std::size_t>(row - j)];
    }
    if (row <= p_degree) r[cols.size() + static_cast<std::size_t>(row)] = -1;
    rhs[static_cast<std::size_t>(row)] = -IntPow(row, order) * f[static_cast<std::size_t>(row)];
  }
  std::vector<Rational> x = SolveExactLinear(std::move(m), std::move(rhs));
  DifferentialApproximant a;
  a.order = order;
  a.q_degrees = q_degrees;
  a.p_degree = p_degree;
  a.terms_used = unknowns;
  a.q.resize(static_cast<std::size_t>(order + 1));
  for (int i = 0; i <= order; ++i) a.q[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(q_degrees[static_cast<std::size_t>(i)] + 1), 0);
  a.q[static_cast<std::size_t>(order)][0] = 1;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    a.q[static_cast<std::size_t>(cols[c].first)][static_cast<std::size_t>(cols[c].second)] = x[c];
  }
  a.p.assign(x.begin() + static_cast<std::ptrdiff_t>(cols.size()), x.end());
  return a;
}

// Extends f in place by num_new coefficients; stops early on a zero pivot.
void Forward(const DifferentialApproximant& a, std::vector<Rational>& f, int num_new) {
  for (int step = 0; step < num_new; ++step) {
    const int m = static_cast<int>(f.size());
    if (m <= a.p_degree) throw DomainError("recurrence start inside the inhomogeneous part");
    Rational pivot = 0, sum = 0;
    for (int i = 0; i <= a.order; ++i) {
      const auto& qi = a.q[static_cast<std::size_t>(i)];
      pivot += qi[0] * IntPow(m, i);
      for (std::size_t j = 1; j < qi.size(); ++j) {
        if (m - static_cast<int>(j) < 0 || qi[j] == 0) continue;
        sum += qi[j] * IntPow(m - static_cast<int>(j), i) * f[static_cast<std::size_t>(m) - j];
      }
    }
    if (pivot == 0) throw DomainError("vanishing pivot at order " + std::to_string(m));
    f.push_back(-sum / pivot);
  }
}

double ToDouble(const Rational& q) { return static_cast<double>(ToLongDouble(q)); }

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

}  // namespace

int ApproximantUnknowns(const std::vector<int>& q_degrees, int p_degree) {
  int u = 0;
  for (int d : q_degrees) u += d + 1;
  return u - 1 + p_degree + 1;
}

int DifferentialApproximant::num_unknowns() const { return ApproximantUnknowns(q_degrees, p_degree); }

DifferentialApproximant FitApproximant(const CountSeries& s, int order,
                                       const std::vector<int>& q_degrees, int p_degree) {
  if (order < 1 || static_cast<int>(q_degrees.size()) != order + 1 || p_degree < 0) {
    throw DomainError("bad approximant shape");
  }
  return Fit(Coefficients(s), order, q_degrees, p_degree);
}

std::vector<Rational> RecurrenceForward(const DifferentialApproximant& a, const CountSeries& s,
                                        int num_new, std::optional<int> start) {
  std::vector<Rational> f = Coefficients(s);
  const int from = start.value_or(static_cast<int>(f.size()));
  if (from < 1 || from > static_cast<int>(f.size())) throw DomainError("bad recurrence start");
  f.resize(static_cast<std::size_t>(from));
  const int total = std::max(0, num_new);
  Forward(a, f, total);
  return std::vector<Rational>(f.end() - total, f.end());
}

std::pair<CountSeries, PredictionEnsemble> ExtendSeries(const CountSeries& s, int num_new,
                                                        const EnsembleSpec& spec) {
  const int exact = s.num_exact();
  if (exact < spec.min_exact_terms) {
    throw DomainError("extension needs " + std::to_string(spec.min_exact_terms) +
                      " exact terms, have " + std::to_string(exact));
  }
  const std::vector<Rational> f = Coefficients(s);
  const int avail = static_cast<int>(f.size());

  std::vector<Shape> grid;
  for (int order : spec.orders) {
    for (int l = 0; l <= spec.max_p_degree; ++l) {
      for (int d0 = 1; d0 < avail; ++d0) {
        // All offset vectors for Q_1..Q_K in [-spread, spread].
        const int span = 2 * spec.degree_spread + 1;
        int combos = 1;
        for (int i = 0; i < order; ++i) combos *= span;
        for (int c = 0; c < combos; ++c) {
          std::vector<int> degs{d0};
          int rest = c;
          bool ok = true;
          for (int i = 0; i < order; ++i) {
            int d = d0 + rest % span - spec.degree_spread;
            rest /= span;
            if (d < 0) ok = false;
            degs.push_back(d);
          }
          if (!ok) continue;
          const int u = ApproximantUnknowns(degs, l);
          if (u < spec.min_usage * avail || u > spec.max_usage * avail) continue;
          grid.push_back({order, std::move(degs), l});
        }
      }
    }
  }

  // One prediction vector per shape; empty when the fit is unavailable.
  std::vector<std::vector<double>> preds(grid.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t g = begin; g < grid.size(); g += stride) {
      try {
        DifferentialApproximant a = Fit(f, grid[g].order, grid[g].q_degrees, grid[g].p_degree);
        std::vector<Rational> ext = f;
        try {
          Forward(a, ext, num_new);
        } catch (const DomainError&) {
        }
        for (std::size_t i = f.size(); i < ext.size(); ++i) preds[g].push_back(ToDouble(ext[i]));
      } catch (const SingularMatrixError&) {
      } catch (const DomainError&) {
      }
    }
  };
  const int threads = std::max(1, spec.threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, static_cast<std::size_t>(t), static_cast<std::size_t>(threads));
    for (auto& th : pool) th.join();
  }

  PredictionEnsemble ens;
  ens.fits_attempted = static_cast<int>(grid.size());
  ens.fits_used = static_cast<int>(std::count_if(preds.begin(), preds.end(), [](const auto& p) { return !p.empty(); }));
  if (ens.fits_used < spec.min_fits) {
    throw DomainError("only " + std::to_string(ens.fits_used) + " approximants available, need " +
                      std::to_string(spec.min_fits));
  }

  CountSeries out = s.Truncated(exact);
  for (int k = 0; k < num_new; ++k) {
    std::vector<double> v;
    for (const auto& p : preds) {
      if (static_cast<int>(p.size()) > k && std::isfinite(p[static_cast<std::size_t>(k)])) v.push_back(p[static_cast<std::size_t>(k)]);
    }
    if (static_cast<int>(v.size()) < spec.min_fits) break;
    const double med = Median(v);
    std::vector<double> dev;
    for (double x : v) dev.push_back(std::fabs(x - med));
    const double mad = Median(dev);
    std::vector<double> kept;
    for (double x : v) {
      if (mad == 0 || std::fabs(x - med) <= spec.mad_factor * mad) kept.push_back(x);
    }
    std::sort(kept.begin(), kept.end());
    long double sum = 0;
    for (double x : kept) sum += x;
    const long double mean = sum / static_cast<long double>(kept.size());
    long double ss = 0;
    for (double x : kept) ss += (x - mean) * (x - mean);
    const double sigma = static_cast<double>(std::sqrt(ss / static_cast<long double>(kept.size())));
    PredictionEntry e{exact + k + 1, static_cast<double>(mean), sigma, static_cast<int>(kept.size())};
    if (spec.max_relative_sigma > 0 && e.sigma > spec.max_relative_sigma * std::fabs(e.mean)) break;
    ens.entries.push_back(e);
    out.terms.push_back({Provenance::kPredicted, Rational(0), e.mean, e.sigma});
  }
  return {std::move(out), std::move(ens)};
}

HoldoutResult Holdout(const CountSeries& s, int m, EnsembleSpec spec) {
  const int exact = s.num_exact();
  if (m < 1 || m >= exact) throw DomainError("bad holdout size");
  spec.max_relative_sigma = 0;
  auto [ext, ens] = ExtendSeries(s.Truncated(exact - m), m, spec);
  HoldoutResult r;
  r.dropped = m;
  r.predictions = ens.entries;
  std::vector<BigInt> all = s.ExactCounts();
  r.within_3sigma = static_cast<int>(ens.entries.size()) == m;
  for (int k = 0; k < m; ++k) {
    const BigInt& truth = all[static_cast<std::size_t>(exact - m + k)];
    r.truth.push_back(truth);
    if (k < static_cast<int>(ens.entries.size())) {
      const auto& e = ens.entries[static_cast<std::size_t>(k)];
      const long double err = std::fabs(static_cast<long double>(e.mean) - ToLongDouble(truth));
      if (err > 3.0L * e.sigma) r.within_3sigma = false;
    }
  }
  return r;
}

}  // namespace tilecount
