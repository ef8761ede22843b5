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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "tilecount/asymptotics.hpp"
#include "tilecount/errors.hpp"
#include "tilecount/extend.hpp"
#include "tilecount/fixtures.hpp"
#include "tilecount/series.hpp"
#include "tilecount/typepoly.hpp"

namespace tilecount::cli {
namespace {

constexpr double kMuRelTol = 0.002;
constexpr double kAmplitudeRelTol = 0.02;
constexpr double kPredictionRelTol = 1e-5;

// RFC 4180 rows; none of our cells need quoting.
class Csv {
 public:
  explicit Csv(std::string header) { text_ << header << "\r\n"; }
  template <typename... T>
  void Row(const T&... cells) {
    std::size_t i = 0;
    ((text_ << (i++ ? "," : "") << cells), ...);
    text_ << "\r\n";
  }
  void Save(const std::string& dir, const std::string& name) const {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    std::ofstream f(std::filesystem::path(dir) / name, std::ios::binary);
    f << text_.str();
  }

 private:
  std::ostringstream text_;
};

std::string Num(long double v, int digits) {
  std::ostringstream o;
  o << std::setprecision(digits) << v;
  return o.str();
}

// Counts table; with a series dir, diff every flat-wK.json found there.
int AppendixA(const ReportArgs& a) {
  int rc = kOk;
  Csv csv("w,n,count,computed,match");
  int missing = 0;
  for (int w = 2; w <= 10; ++w) {
    CountSeries fx = LoadFlatFixture(w);
    std::cout << "w=" << w << " (" << fx.num_exact() << " terms)\n";
    std::vector<BigInt> mine;
    if (!a.series_dir.empty()) {
      auto path = std::filesystem::path(a.series_dir) / ("flat-w" + std::to_string(w) + ".json");
      if (std::filesystem::exists(path)) {
        mine = ReadSeriesFile(path.string()).ExactCounts();
      } else {
        std::cerr << "missing " << path.string() << "; produce it with: tilecount count2d --w " << w
                  << " --n <N> --out " << path.string() << "\n";
        ++missing;
      }
    }
    auto ref = fx.ExactCounts();
    for (std::size_t i = 0; i < ref.size(); ++i) {
      std::cout << std::setw(4) << i + 1 << "  " << std::setw(26) << ToString(ref[i]);
      std::string computed, match;
      if (i < mine.size()) {
        bool same = mine[i] == ref[i];
        computed = ToString(mine[i]);
        match = same ? "yes" : "no";
        std::cout << (same ? "  =" : "  DIFF " + computed);
        if (!same) rc = kAssertion;
      }
      std::cout << "\n";
      csv.Row(w, i + 1, ToString(ref[i]), computed, match);
    }
  }
  csv.Save(a.out_dir, "appendixA.csv");
  if (rc == kOk && missing > 0) rc = kPartial;
  return rc;
}

int Asymptotics(const ReportArgs& a) {
  int rc = kOk;
  Csv csv("w,mu,mu_uncertainty,mu_table,mu_rel,amplitude,amplitude_table,amplitude_rel");
  std::cout << std::setw(3) << "w" << std::setw(14) << "mu" << std::setw(10) << "+-"
            << std::setw(12) << "table" << std::setw(11) << "rel" << std::setw(12) << "A"
            << std::setw(10) << "table" << std::setw(11) << "rel" << "\n";
  for (const auto& row : LoadAsymptoticsTable()) {
    FamilyAnalysis f = AnalyzeFixedExponent(LoadFlatFixture(row.w));
    Real rel_mu = (f.fit.mu - row.mu) / row.mu;
    Real amp = f.amplitude.coefficient_amplitude;
    Real rel_a = (amp - row.amplitude) / row.amplitude;
    bool ok = std::fabs(rel_mu) <= kMuRelTol && std::fabs(rel_a) <= kAmplitudeRelTol;
    if (!ok) rc = kAssertion;
    std::cout << std::setw(3) << row.w << std::setw(14) << Num(f.fit.mu, 9) << std::setw(10)
              << Num(f.fit.mu_uncertainty, 2) << std::setw(12) << Num(row.mu, 8) << std::setw(11)
              << Num(rel_mu, 2) << std::setw(12) << Num(amp, 6) << std::setw(10)
              << Num(row.amplitude, 5) << std::setw(11) << Num(rel_a, 2) << (ok ? "" : "  OUT")
              << "\n";
    csv.Row(row.w, Num(f.fit.mu, 12), Num(f.fit.mu_uncertainty, 3), Num(row.mu, 8),
            Num(rel_mu, 3), Num(amp, 8), Num(row.amplitude, 5), Num(rel_a, 3));
  }
  csv.Save(a.out_dir, "asymptotics.csv");
  return rc;
}

int Polynomials(const ReportArgs& a) {
  int rc = kOk;
  Csv csv("n,k,a_nk,identities,gf_palindromic,gf_unimodal");
  for (const auto& fx : LoadPolynomialFixtures()) {
    PolynomialFamily f = MakeFamily(fx.n, fx.monomial, PolynomialSource::kFixture);
    bool binom_ok = !fx.binomial || *fx.binomial == f.binomial;
    auto checks = IdentitySuite(f);
    GFNumerator gf = GfNumerator(f);
    bool ok = binom_ok && AllPassed(checks) && gf.palindromic && gf.reciprocity &&
              gf.even_factor_ok;
    if (!ok) rc = kAssertion;
    std::cout << "n=" << std::setw(2) << fx.n << "  " << (ok ? "ok  " : "FAIL") << "  p(w) = "
              << f.monomial.ToString("w") << "\n      a_{n,k}:";
    for (const auto& c : f.binomial.a) std::cout << " " << ToString(c);
    std::cout << "\n";
    for (const auto& c : checks) {
      if (!c.passed) std::cout << "      " << c.name << ": " << c.detail << "\n";
    }
    if (!binom_ok) std::cout << "      binomial coefficients differ from the fixture\n";
    for (std::size_t k = 0; k < f.binomial.a.size(); ++k) {
      csv.Row(fx.n, k + 1, ToString(f.binomial.a[k]), AllPassed(checks) ? "pass" : "fail",
              gf.palindromic ? "yes" : "no", gf.unimodal ? "yes" : "no");
    }
    if (!a.out_dir.empty()) {
      std::filesystem::create_directories(a.out_dir);
      std::ofstream(std::filesystem::path(a.out_dir) / ("p" + std::to_string(fx.n) + ".json"))
          << PolynomialToJson(f);
    }
  }
  csv.Save(a.out_dir, "polynomials.csv");
  return rc;
}

// Predict terms 21.. of w=2 from its first 20 and compare.
int Prediction(const ReportArgs& a, const RunConfig& cfg) {
  auto table = LoadPredictionTable();
  CountSeries s = LoadFlatFixture(2).Truncated(20);
  EnsembleSpec spec;
  spec.threads = cfg.threads;
  spec.max_relative_sigma = 0;
  auto [ext, ens] = ExtendSeries(s, static_cast<int>(table.size()), spec);
  int rc = kOk;
  Csv csv("n,actual,predicted,fractional_error,table_predicted,table_fractional_error");
  std::cout << std::setw(4) << "n" << std::setw(22) << "actual" << std::setw(24) << "predicted"
            << std::setw(11) << "frac err" << std::setw(11) << "table" << "\n";
  for (std::size_t i = 0; i < table.size() && i < ens.entries.size(); ++i) {
    const auto& row = table[i];
    long double truth = ToLongDouble(row.actual);
    long double err = (static_cast<long double>(ens.entries[i].mean) - truth) / truth;
    if (std::fabs(err) > kPredictionRelTol) rc = kAssertion;
    std::ostringstream pred;
    pred << std::fixed << std::setprecision(0) << ens.entries[i].mean;
    std::cout << std::setw(4) << row.n << std::setw(22) << ToString(row.actual) << std::setw(24)
              << pred.str() << std::setw(11) << Num(err, 2) << std::setw(11)
              << Num(row.fractional_error, 2) << "\n";
    csv.Row(row.n, ToString(row.actual), pred.str(), Num(err, 3), ToString(row.predicted),
            Num(row.fractional_error, 3));
  }
  csv.Save(a.out_dir, "prediction.csv");
  return rc;
}

}  // namespace

int Report(const ReportArgs& a, const RunConfig& cfg) {
  if (a.table == "appendixA") return AppendixA(a);
  if (a.table == "asymptotics") return Asymptotics(a);
  if (a.table == "polynomials") return Polynomials(a);
  if (a.table == "prediction") return Prediction(a, cfg);
  std::cerr << "unknown table '" << a.table << "'\n";
  return kUsage;
}

}  // namespace tilecount::cli
