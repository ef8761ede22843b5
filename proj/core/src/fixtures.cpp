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

#include "tilecount/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#ifndef TILECOUNT_DEFAULT_DATA_DIR
#define TILECOUNT_DEFAULT_DATA_DIR "data"
#endif

namespace tilecount {
namespace {

using Json = nlohmann::json;

std::string Slurp(const std::string& name) {
  const std::string path = FixtureDir() + "/" + name;
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "fixture not found");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json LoadJson(const std::string& name) {
  try {
    return Json::parse(Slurp(name));
  } catch (const Json::exception& e) {
    throw SchemaError(name, e.what());
  }
}

std::vector<std::vector<std::string>> LoadCsv(const std::string& name) {
  std::stringstream in(Slurp(name));
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

std::string FixtureDir() {
  if (const char* env = std::getenv("TILECOUNT_DATA_DIR"); env && *env) return env;
  return TILECOUNT_DEFAULT_DATA_DIR;
}

CountSeries LoadFlatFixture(int w) {
  if (w < 2 || w > 10) throw DomainError("no flat fixture for w=" + std::to_string(w));
  return SeriesFromJson(Slurp("flat-w" + std::to_string(w) + ".json"));
}

CountSeries LoadBrickFixture() { return SeriesFromJson(Slurp("brick2x4.json")); }

std::vector<PolynomialFixture> LoadPolynomialFixtures() {
  Json doc = LoadJson("polynomials.json");
  std::vector<PolynomialFixture> out;
  for (const Json& e : doc.at("polynomials")) {
    PolynomialFixture f;
    f.n = e.at("n").get<int>();
    std::vector<Rational> coeffs;
    for (const Json& c : e.at("monomial")) {
      coeffs.push_back(MakeRational(ParseBigInt(c.at(0).get<std::string>()),
                                    ParseBigInt(c.at(1).get<std::string>())));
    }
    f.monomial = Polynomial(std::move(coeffs));
    if (e.contains("binomial")) {
      BinomialRep rep;
      for (const Json& c : e["binomial"]) rep.a.push_back(ParseBigInt(c.get<std::string>()));
      f.binomial = std::move(rep);
    }
    out.push_back(std::move(f));
  }
  return out;
}

Polynomial GfNumeratorFixture::Numerator() const {
  if (!one_plus_x_factor) return poly;
  return poly * Polynomial({Rational(1), Rational(1)});
}

std::vector<GfNumeratorFixture> LoadGfNumeratorFixtures() {
  Json doc = LoadJson("gf_numerators.json");
  std::vector<GfNumeratorFixture> out;
  for (const Json& e : doc.at("numerators")) {
    GfNumeratorFixture f;
    f.n = e.at("n").get<int>();
    f.one_plus_x_factor = e.at("one_plus_x_factor").get<bool>();
    std::vector<Rational> coeffs;
    for (const Json& c : e.at("coefficients")) coeffs.emplace_back(ParseBigInt(c.get<std::string>()));
    f.poly = Polynomial(std::move(coeffs));
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<AsymptoticsRow> LoadAsymptoticsTable() {
  std::vector<AsymptoticsRow> out;
  for (const auto& r : LoadCsv("asymptotics.csv")) {
    if (r.size() != 3) throw SchemaError("asymptotics.csv", "expected 3 columns");
    out.push_back({std::stoi(r[0]), std::stod(r[1]), std::stod(r[2])});
  }
  return out;
}

std::vector<PredictionRow> LoadPredictionTable() {
  std::vector<PredictionRow> out;
  for (const auto& r : LoadCsv("prediction.csv")) {
    if (r.size() != 4) throw SchemaError("prediction.csv", "expected 4 columns");
    out.push_back({std::stoi(r[0]), ParseBigInt(r[1]), ParseBigInt(r[2]), std::stod(r[3])});
  }
  return out;
}

}  // namespace tilecount
