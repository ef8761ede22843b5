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

#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "tilecount/asymptotics.hpp"
#include "tilecount/brick3d.hpp"
#include "tilecount/errors.hpp"
#include "tilecount/extend.hpp"
#include "tilecount/fixtures.hpp"
#include "tilecount/flat.hpp"
#include "tilecount/flat_transfer.hpp"
#include "tilecount/series.hpp"
#include "tilecount/typepoly.hpp"

namespace tilecount::cli {
namespace {

void PrintCounts(const std::vector<BigInt>& counts, int first_n = 1) {
  std::size_t width = 3;
  for (const auto& c : counts) width = std::max(width, ToString(c).size());
  std::cout << std::setw(4) << "n" << "  " << std::setw(static_cast<int>(width)) << "count"
            << "\n";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    std::cout << std::setw(4) << first_n + static_cast<int>(i) << "  "
              << std::setw(static_cast<int>(width)) << ToString(counts[i]) << "\n";
  }
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

}  // namespace

std::uint64_t ParseByteSize(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty size");
  std::size_t used = 0;
  double v = std::stod(text, &used);
  std::string suffix = text.substr(used);
  double mult = 1;
  if (suffix == "" || suffix == "B") {
  } else if (suffix == "K" || suffix == "KiB") {
    mult = 1024.0;
  } else if (suffix == "M" || suffix == "MiB") {
    mult = 1024.0 * 1024;
  } else if (suffix == "G" || suffix == "GiB") {
    mult = 1024.0 * 1024 * 1024;
  } else {
    throw std::invalid_argument("bad size suffix '" + suffix + "'");
  }
  if (v <= 0) throw std::invalid_argument("size must be positive");
  return static_cast<std::uint64_t>(v * mult);
}

RunConfig DefaultRunConfig() {
  RunConfig cfg;
  if (const char* env = std::getenv("TILECOUNT_MEMORY_BUDGET"); env && *env) {
    cfg.memory_budget_bytes = ParseByteSize(env);
  }
  return cfg;
}

int Count2d(const Count2dArgs& a, const RunConfig& cfg) {
  CountSeries s;
  s.family = "flat-w" + std::to_string(a.w);
  s.w = a.w;
  std::vector<BigInt> counts;
  try {
    if (a.engine == "brute") {
      EnumerationLimits lim;
      lim.max_visited = cfg.max_visited;
      counts = CountFlatSeries(a.w, a.n, lim);
      s.generator = "flat-brute";
    } else {
      TransferOptions opt;
      opt.threads = cfg.threads;
      opt.memory_budget_bytes = cfg.memory_budget_bytes;
      opt.time_budget_seconds = cfg.time_budget_seconds;
      counts = TmCount(a.w, a.n, opt);
      s.generator = "flat-transfer";
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n"
              << "largest completed n: " << e.largest_completed_n() << "\n";
    PrintCounts(e.partial_counts());
    if (!a.out.empty() && !e.partial_counts().empty()) {
      WriteSeriesFile(a.out, CountSeries::FromCounts(s.family, s.w, e.partial_counts(),
                                                     s.generator + ":partial"));
    }
    return kPartial;
  }
  PrintCounts(counts);
  if (!a.out.empty()) {
    WriteSeriesFile(a.out, CountSeries::FromCounts(s.family, s.w, counts, s.generator));
  }
  return kOk;
}

int Count3d(const Count3dArgs& a, const RunConfig& cfg) {
  BuildingCountOptions opt;
  opt.threads = cfg.threads;
  std::vector<BigInt> counts;
  try {
    counts = CountBuildingsSeries(a.n, opt);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n"
              << "largest completed n: " << e.largest_completed_n() << "\n";
    PrintCounts(e.partial_counts());
    return kPartial;
  }
  PrintCounts(counts);
  if (!a.out.empty()) {
    WriteSeriesFile(a.out, CountSeries::FromCounts("brick2x4", std::nullopt, counts, "brick3d"));
  }
  return kOk;
}

int Poly(const PolyArgs& a, const RunConfig& cfg) {
  int widths = a.use_symmetry ? a.n / 2 + 1 : a.n + 1;
  std::vector<std::pair<int, BigInt>> values;
  for (int w = 1; w <= widths; ++w) {
    if (w == 1) {
      values.emplace_back(1, BigInt(1));
      continue;
    }
    if (a.from_fixtures) {
      if (w > 10) break;
      CountSeries f = LoadFlatFixture(w);
      if (f.num_exact() < a.n) continue;
      values.emplace_back(w, f.ExactCounts()[static_cast<std::size_t>(a.n - 1)]);
    } else {
      TransferOptions opt;
      opt.threads = cfg.threads;
      opt.memory_budget_bytes = cfg.memory_budget_bytes;
      opt.time_budget_seconds = cfg.time_budget_seconds;
      try {
        values.emplace_back(w, TmCount(w, a.n, opt).back());
      } catch (const ResourceLimitError& e) {
        std::cerr << "w=" << w << ": " << e.what() << "\n";
        break;
      }
    }
  }
  PolynomialFamily f;
  try {
    f = FitPolynomial(a.n, values, a.use_symmetry);
  } catch (const DomainError& e) {
    std::cerr << "fit failed: " << e.what() << "\n";
    return kPartial;
  }
  std::cout << "p_" << a.n << "(w) = " << f.monomial.ToString("w") << "\n";
  std::cout << "binomial basis a_{" << a.n << ",k}:";
  for (const auto& c : f.binomial.a) std::cout << " " << ToString(c);
  std::cout << "\nsource: " << ToString(f.source) << " (" << values.size() << " widths)\n";
  auto checks = IdentitySuite(f);
  for (const auto& c : checks) {
    std::cout << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << "  " << c.detail;
    std::cout << "\n";
  }
  GFNumerator gf = GfNumerator(f);
  std::cout << "GF numerator: " << gf.a.ToString("x") << "\n"
            << "  palindromic " << gf.palindromic << ", unimodal " << gf.unimodal
            << ", reciprocity " << gf.reciprocity << ", even factor " << gf.even_factor_ok
            << "\n";
  if (!gf.unimodal) std::cerr << "warning: numerator is not unimodal\n";
  if (!a.out.empty()) WriteText(a.out, PolynomialToJson(f));
  bool ok = AllPassed(checks) && gf.degree_ok && gf.palindromic && gf.reciprocity &&
            gf.even_factor_ok;
  return ok ? kOk : kAssertion;
}

int Types(const TypesArgs& a, const RunConfig& cfg) {
  EnumerationLimits lim;
  lim.max_visited = cfg.max_visited;
  std::vector<BigInt> coeffs = TypeCoefficients(a.n, a.n, lim);
  std::cout << "types by offset complexity, n=" << a.n << "\n";
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    std::cout << std::setw(4) << k + 1 << "  " << ToString(coeffs[k]) << "\n";
  }
  int rc = kOk;
  for (int w : a.check_widths) {
    TypeMultiplicityReport r = TypeMultiplicityCheck(a.n, w, lim);
    std::cout << "w=" << w << ": " << (r.ok() ? "multiplicities ok" : "MISMATCH")
              << ", total " << ToString(r.Total()) << "\n";
    for (const auto& line : r.failures) std::cout << "  " << line << "\n";
    if (!r.ok()) rc = kAssertion;
  }
  return rc;
}

int Analyze(const AnalyzeArgs& a) {
  CountSeries s = ReadSeriesFile(a.series);
  std::vector<std::string> names = a.estimators;
  if (names.empty()) {
    names = {"ratio", "intercept", "exponent", "refined_mu1", "refined_mu2", "c1", "fit"};
  }
  FamilyAnalysis fam;
  bool free_exponent = !a.g.has_value() && s.family == "brick2x4";
  fam = free_exponent ? AnalyzeFreeExponent(s) : AnalyzeFixedExponent(s, a.g.value_or(-1));
  Real mu = a.mu ? static_cast<Real>(*a.mu) : fam.fit.mu;
  std::vector<EstimatorTrace> traces;
  for (const auto& n : names) {
    if (n == "ratio") {
      traces.push_back(Ratios(s));
    } else if (n == "intercept") {
      traces.push_back(LinearIntercepts(s));
    } else if (n == "exponent") {
      traces.push_back(ExponentEstimates(s, mu));
    } else if (n == "refined_mu1") {
      traces.push_back(RefinedMu(s, 1));
    } else if (n == "refined_mu2") {
      traces.push_back(RefinedMu(s, 2));
    } else if (n == "c1") {
      traces.push_back(C1Estimates(s, mu));
    } else if (n == "fit") {
      auto fits = free_exponent ? FitRatioExpansionFreeExponent(s, 2)
                                : FitRatioExpansion(s, 2, a.g.value_or(-1));
      traces.push_back(FitTrace(fits, "fit"));
    } else if (n == "amplitude") {
      traces.push_back(fam.amplitude.trace);
    } else if (n == "logconvex" || n == "hankel") {
      // summary lines only
    } else {
      std::cerr << "unknown estimator '" << n << "'\n";
      return kUsage;
    }
  }
  std::cout << std::setprecision(8);
  std::cout << "family " << s.family << ", " << s.size() << " terms (" << s.num_exact()
            << " exact)\n";
  std::cout << "mu        " << fam.fit.mu << " +- " << fam.fit.mu_uncertainty << "\n"
            << "exponent  " << fam.exponent << " +- " << fam.exponent_uncertainty << "\n";
  if (fam.fit.c1) std::cout << "c1        " << *fam.fit.c1 << "\n";
  std::cout << "amplitude " << fam.amplitude.coefficient_amplitude << " +- "
            << fam.amplitude.uncertainty << " (gf " << fam.amplitude.gf_amplitude << ")\n";
  LogConvexity lc = LogConvexityBound(s);
  std::cout << "log-convex " << lc.log_convex << ", differences increasing "
            << lc.differences_increasing << ", lower bound " << lc.lower_bound << "\n";
  if (std::find(names.begin(), names.end(), "hankel") != names.end()) {
    HankelReport h = HankelDiagnostic(s);
    if (h.first_negative) {
      std::cout << "hankel: first negative determinant at order " << h.first_negative->first
                << ", shift " << h.first_negative->second << "\n";
    } else {
      std::cout << "hankel: no negative determinant\n";
    }
  }
  for (const auto& t : traces) {
    std::cout << std::setw(12) << t.name << "  terminal " << t.terminal() << "  ("
              << t.points.size() << " points)\n";
  }
  if (!a.out_dir.empty()) {
    std::filesystem::create_directories(a.out_dir);
    for (const auto& t : traces) {
      WriteText((std::filesystem::path(a.out_dir) / (t.name + ".csv")).string(), TraceToCsv(t));
    }
  }
  return kOk;
}

int Extend(const ExtendArgs& a, const RunConfig& cfg) {
  CountSeries s = ReadSeriesFile(a.series);
  EnsembleSpec spec;
  spec.threads = cfg.threads;
  if (a.no_precision_stop) spec.max_relative_sigma = 0;
  auto [out, ens] = ExtendSeries(s, a.terms, spec);
  std::cout << "fits used " << ens.fits_used << " of " << ens.fits_attempted << "\n";
  std::cout << std::setw(4) << "n" << std::setw(26) << "prediction" << std::setw(14) << "sigma"
            << std::setw(6) << "fits" << "\n";
  for (const auto& e : ens.entries) {
    std::ostringstream m;
    m << std::setprecision(17) << e.mean;
    std::cout << std::setw(4) << e.n << std::setw(26) << m.str() << std::setw(14)
              << std::setprecision(4) << e.sigma << std::setw(6) << e.count << "\n";
  }
  if (static_cast<int>(ens.entries.size()) < a.terms) {
    std::cerr << "stopped after " << ens.entries.size() << " terms (precision)\n";
  }
  if (!a.out.empty()) WriteSeriesFile(a.out, out);
  return static_cast<int>(ens.entries.size()) < a.terms ? kPartial : kOk;
}

int Pyramid(const PyramidArgs& a) {
  if (a.w) {
    std::cout << ToString(PyramidCount(a.n, *a.w)) << "\n";
    return kOk;
  }
  PolynomialFamily f = PyramidPolynomial(a.n);
  std::cout << "pyr_" << a.n << "(w) = " << f.monomial.ToString("w") << "\n";
  for (int w = 1; w <= 6; ++w) {
    std::cout << "  w=" << w << "  " << ToString(PyramidCount(a.n, w)) << "\n";
  }
  return kOk;
}

}  // namespace tilecount::cli
