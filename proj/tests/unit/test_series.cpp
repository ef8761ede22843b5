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

#include <gtest/gtest.h>

#include <filesystem>

#include "tilecount/errors.hpp"
#include "tilecount/fixtures.hpp"
#include "tilecount/series.hpp"

namespace tilecount {
namespace {

CountSeries Mixed() {
  CountSeries s = CountSeries::FromCounts("flat-w2", 2, {1, 3, 11, 44}, "test");
  SeriesTerm t;
  t.provenance = Provenance::kPredicted;
  t.predicted = 186.25;
  t.sigma = 0.5;
  s.terms.push_back(t);
  return s;
}

TEST(SeriesFile, RoundTripIsByteIdentical) {
  CountSeries s = Mixed();
  std::string first = SeriesToJson(s);
  CountSeries back = SeriesFromJson(first);
  EXPECT_EQ(back, s);
  EXPECT_EQ(SeriesToJson(back), first);
}

TEST(SeriesFile, FileRoundTrip) {
  auto path = std::filesystem::temp_directory_path() / "tilecount_series_rt.json";
  CountSeries big = CountSeries::FromCounts(
      "custom", std::nullopt, {BigInt("123456789012345678901234567890"), 1}, "test");
  WriteSeriesFile(path.string(), big);
  EXPECT_EQ(ReadSeriesFile(path.string()), big);
  std::filesystem::remove(path);
}

TEST(SeriesFile, FixturesRoundTrip) {
  for (int w = 2; w <= 10; ++w) {
    CountSeries s = LoadFlatFixture(w);
    EXPECT_EQ(s.Validate(), "");
    EXPECT_EQ(SeriesFromJson(SeriesToJson(s)), s);
  }
  EXPECT_EQ(LoadBrickFixture().num_exact(), 10);
}

std::string PointerOf(const std::string& text) {
  try {
    SeriesFromJson(text);
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "<none>";
}

TEST(SeriesFile, SchemaErrorsNameTheField) {
  EXPECT_EQ(PointerOf(R"({"family":"x","w":null,"terms":[],"generator":"g","version":1})"),
            "/family");
  EXPECT_EQ(PointerOf(R"({"family":"flat-w2","w":2,"terms":[{"value":"-4","provenance":"exact","sigma":null}],"generator":"g","version":1})"),
            "/terms/0/value");
  EXPECT_EQ(PointerOf(R"({"family":"custom","w":null,"terms":[{"value":"4","provenance":"guess","sigma":null}],"generator":"g","version":1})"),
            "/terms/0/provenance");
  EXPECT_EQ(PointerOf(R"({"family":"custom","w":null,"terms":[],"generator":"g"})"), "/version");
  EXPECT_EQ(PointerOf("not json"), "");
}

TEST(SeriesFile, TruncatedAndExact) {
  CountSeries s = Mixed();
  EXPECT_EQ(s.num_exact(), 4);
  EXPECT_EQ(s.Truncated(2).size(), 2);
  EXPECT_EQ(s.term(3).exact, 11);
}

}  // namespace
}  // namespace tilecount
