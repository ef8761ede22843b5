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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tilecount::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kPartial = 2, kAssertion = 3 };

struct RunConfig {
  int threads = 1;
  std::uint64_t memory_budget_bytes = 8ull << 30;
  /// Seconds; 0 means none.
  double time_budget_seconds = 0;
  std::uint64_t max_visited = 100'000'000;
};

/// "512M", "8G", plain bytes. Throws std::invalid_argument.
std::uint64_t ParseByteSize(const std::string& text);
/// Defaults, then $TILECOUNT_MEMORY_BUDGET.
RunConfig DefaultRunConfig();

struct Count2dArgs {
  int w = 2;
  int n = 10;
  std::string engine = "tm";
  std::string out;
};
int Count2d(const Count2dArgs& a, const RunConfig& cfg);

struct Count3dArgs {
  int n = 3;
  std::string out;
};
int Count3d(const Count3dArgs& a, const RunConfig& cfg);

struct PolyArgs {
  int n = 4;
  bool use_symmetry = false;
  /// Take p_n(w) from the vendored count tables instead of counting.
  bool from_fixtures = false;
  std::string out;
};
int Poly(const PolyArgs& a, const RunConfig& cfg);

struct TypesArgs {
  int n = 3;
  /// Also run the multiplicity check at these widths.
  std::vector<int> check_widths;
};
int Types(const TypesArgs& a, const RunConfig& cfg);

struct AnalyzeArgs {
  std::string series;
  std::vector<std::string> estimators;
  std::optional<double> mu;
  std::optional<double> g;
  std::string out_dir;
};
int Analyze(const AnalyzeArgs& a);

struct ExtendArgs {
  std::string series;
  int terms = 5;
  bool no_precision_stop = false;
  std::string out;
};
int Extend(const ExtendArgs& a, const RunConfig& cfg);

struct PyramidArgs {
  int n = 3;
  std::optional<int> w;
};
int Pyramid(const PyramidArgs& a);

struct ReportArgs {
  std::string table;
  std::string series_dir;
  std::string out_dir;
};
int Report(const ReportArgs& a, const RunConfig& cfg);

}  // namespace tilecount::cli
