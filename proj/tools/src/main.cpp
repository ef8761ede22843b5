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

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "tilecount/errors.hpp"

using namespace tilecount::cli;

int main(int argc, char** argv) {
  CLI::App app{"tilecount: counting and analysing brick structures"};
  app.require_subcommand(1);
  RunConfig cfg;
  try {
    cfg = DefaultRunConfig();
  } catch (const std::exception& e) {
    std::cerr << "TILECOUNT_MEMORY_BUDGET: " << e.what() << "\n";
    return kUsage;
  }
  std::string budget;
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--memory-budget", budget, "transfer table budget, e.g. 2G");
  app.add_option("--time-budget", cfg.time_budget_seconds, "transfer wall-clock cap in seconds")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-visited", cfg.max_visited, "brute-force node cap")->check(CLI::PositiveNumber);

  Count2dArgs c2;
  auto* count2d = app.add_subcommand("count2d", "count flat structures of width w");
  count2d->add_option("--w", c2.w)->required()->check(CLI::Range(1, 64));
  count2d->add_option("--n", c2.n)->required()->check(CLI::Range(1, 200));
  count2d->add_option("--engine", c2.engine)->check(CLI::IsMember({"brute", "tm"}));
  count2d->add_option("--out", c2.out, "write the series as JSON");

  Count3dArgs c3;
  auto* count3d = app.add_subcommand("count3d", "count 2x4 brick buildings up to rotation");
  count3d->add_option("--n", c3.n)->required()->check(CLI::Range(1, 12));
  count3d->add_option("--out", c3.out);

  PolyArgs pa;
  auto* poly = app.add_subcommand("poly", "fit the count polynomial p_n(w)");
  poly->add_option("--n", pa.n)->required()->check(CLI::Range(1, 40));
  poly->add_flag("--use-symmetry", pa.use_symmetry, "use p_n(1-w) = (-1)^(n-1) p_n(w)");
  poly->add_flag("--from-fixtures", pa.from_fixtures, "take counts from the shipped tables");
  poly->add_option("--out", pa.out);

  TypesArgs ta;
  auto* types = app.add_subcommand("types", "offset types by complexity");
  types->add_option("--n", ta.n)->required()->check(CLI::Range(1, 20));
  types->add_option("--w", ta.check_widths, "check multiplicities at these widths");

  AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "ratio-method estimators for a series");
  analyze->add_option("--series", aa.series)->required()->check(CLI::ExistingFile);
  analyze->add_option("--estimators", aa.estimators)->delimiter(',');
  analyze->add_option("--mu", aa.mu);
  analyze->add_option("--g", aa.g, "fix the exponent");
  analyze->add_option("--out", aa.out_dir, "directory for per-estimator CSV");

  ExtendArgs ea;
  auto* extend = app.add_subcommand("extend", "predict further terms");
  extend->add_option("--series", ea.series)->required()->check(CLI::ExistingFile);
  extend->add_option("--terms", ea.terms)->check(CLI::Range(1, 100));
  extend->add_flag("--no-precision-stop", ea.no_precision_stop);
  extend->add_option("--out", ea.out);

  PyramidArgs pya;
  auto* pyramid = app.add_subcommand("pyramid", "pyramid counts");
  pyramid->add_option("--n", pya.n)->required()->check(CLI::Range(1, 200));
  pyramid->add_option("--w", pya.w)->check(CLI::Range(1, 1000));

  ReportArgs ra;
  auto* report = app.add_subcommand("report", "reproduce a reference table");
  report->add_option("--table", ra.table)
      ->required()
      ->check(CLI::IsMember({"appendixA", "asymptotics", "polynomials", "prediction"}));
  report->add_option("--series-dir", ra.series_dir, "diff these series against the table");
  report->add_option("--out", ra.out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  try {
    if (!budget.empty()) cfg.memory_budget_bytes = ParseByteSize(budget);
    if (*count2d) return Count2d(c2, cfg);
    if (*count3d) return Count3d(c3, cfg);
    if (*poly) return Poly(pa, cfg);
    if (*types) return Types(ta, cfg);
    if (*analyze) return Analyze(aa);
    if (*extend) return Extend(ea, cfg);
    if (*pyramid) return Pyramid(pya);
    if (*report) return Report(ra, cfg);
  } catch (const tilecount::SchemaError& e) {
    std::cerr << "schema error at " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const tilecount::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kAssertion;
  }
  return kUsage;
}
