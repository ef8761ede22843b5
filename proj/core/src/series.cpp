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

#include "tilecount/series.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"

namespace tilecount {
namespace {

using Json = nlohmann::ordered_json;

bool ValidFamily(const std::string& f) {
  static const std::regex kFlat("flat-w[1-9][0-9]*");
  return f == "brick2x4" || f == "leading-coeffs" || f == "custom" ||
         std::regex_match(f, kFlat);
}

}  // namespace

long double ToLongDouble(const BigInt& v) {
  return std::strtold(v.get_str(10).c_str(), nullptr);
}

long double ToLongDouble(const Rational& v) {
  if (v == 0) return 0.0L;
  // 96 bits is past the long double significand, so one rounding at the end.
  mpf_class f(v, 96);
  mp_exp_t exp = 0;
  std::string digits = f.get_str(exp, 10, 30);
  bool neg = !digits.empty() && digits[0] == '-';
  if (neg) digits.erase(0, 1);
  std::string text = (neg ? "-0." : "0.") + digits + "e" + std::to_string(exp);
  return std::strtold(text.c_str(), nullptr);
}

long double SeriesTerm::approx() const {
  return is_exact() ? ToLongDouble(exact) : static_cast<long double>(predicted);
}

CountSeries CountSeries::FromCounts(std::string family, std::optional<int> w,
                                    const std::vector<BigInt>& counts,
                                    std::string generator) {
  CountSeries s;
  s.family = std::move(family);
  s.w = w;
  s.generator = std::move(generator);
  for (const BigInt& c : counts) s.terms.push_back({Provenance::kExact, Rational(c), 0.0, {}});
  return s;
}

CountSeries CountSeries::FromRationals(std::string family, const std::vector<Rational>& values,
                                       std::string generator) {
  CountSeries s;
  s.family = std::move(family);
  s.generator = std::move(generator);
  for (const Rational& c : values) s.terms.push_back({Provenance::kExact, c, 0.0, {}});
  return s;
}

int CountSeries::num_exact() const {
  int k = 0;
  while (k < size() && terms[k].is_exact()) ++k;
  return k;
}

std::vector<Rational> CountSeries::ExactValues() const {
  std::vector<Rational> out;
  for (int i = 0; i < num_exact(); ++i) out.push_back(terms[i].exact);
  return out;
}

std::vector<BigInt> CountSeries::ExactCounts() const {
  std::vector<BigInt> out;
  for (const Rational& v : ExactValues()) {
    if (v.get_den() != 1) throw DomainError("series term is not an integer");
    out.push_back(v.get_num());
  }
  return out;
}

CountSeries CountSeries::Truncated(int n) const {
  CountSeries s = *this;
  if (n < size()) s.terms.resize(n);
  return s;
}

std::string CountSeries::Validate() const {
  if (!ValidFamily(family)) return "unknown family '" + family + "'";
  if (version < 1) return "version must be positive";
  bool seen_predicted = false;
  for (int i = 0; i < size(); ++i) {
    const SeriesTerm& t = terms[i];
    if (t.is_exact()) {
      if (seen_predicted) return "exact term " + std::to_string(i + 1) + " after a predicted one";
    } else {
      seen_predicted = true;
      if (t.sigma && *t.sigma < 0) return "negative sigma at term " + std::to_string(i + 1);
    }
  }
  return {};
}

std::string SeriesToJson(const CountSeries& s) {
  Json doc;
  doc["family"] = s.family;
  doc["w"] = s.w ? Json(*s.w) : Json(nullptr);
  Json terms = Json::array();
  for (const SeriesTerm& t : s.terms) {
    Json j;
    if (t.is_exact()) {
      j["value"] = ToString(t.exact);
      j["provenance"] = "exact";
    } else {
      j["value"] = t.predicted;
      j["provenance"] = "predicted";
    }
    j["sigma"] = t.sigma ? Json(*t.sigma) : Json(nullptr);
    terms.push_back(std::move(j));
  }
  doc["terms"] = std::move(terms);
  doc["generator"] = s.generator;
  doc["version"] = s.version;
  return doc.dump(2) + "\n";
}

CountSeries SeriesFromJson(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("not JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("", "document must be an object");
  auto need = [&](const char* key) -> const Json& {
    if (!doc.contains(key)) throw SchemaError(std::string("/") + key, "missing");
    return doc[key];
  };
  CountSeries s;
  const Json& family = need("family");
  if (!family.is_string()) throw SchemaError("/family", "must be a string");
  s.family = family.get<std::string>();
  if (!ValidFamily(s.family)) throw SchemaError("/family", "unknown family '" + s.family + "'");
  const Json& w = need("w");
  if (w.is_number_integer()) {
    s.w = w.get<int>();
  } else if (!w.is_null()) {
    throw SchemaError("/w", "must be an integer or null");
  }
  const Json& gen = need("generator");
  if (!gen.is_string()) throw SchemaError("/generator", "must be a string");
  s.generator = gen.get<std::string>();
  const Json& version = need("version");
  if (!version.is_number_integer() || version.get<int>() < 1)
    throw SchemaError("/version", "must be a positive integer");
  s.version = version.get<int>();
  const Json& terms = need("terms");
  if (!terms.is_array()) throw SchemaError("/terms", "must be an array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string at = "/terms/" + std::to_string(i);
    const Json& t = terms[i];
    if (!t.is_object()) throw SchemaError(at, "must be an object");
    if (!t.contains("value")) throw SchemaError(at + "/value", "missing");
    if (!t.contains("provenance") || !t["provenance"].is_string())
      throw SchemaError(at + "/provenance", "missing or not a string");
    SeriesTerm term;
    const std::string prov = t["provenance"].get<std::string>();
    const Json& value = t["value"];
    if (prov == "exact") {
      if (!value.is_string()) throw SchemaError(at + "/value", "exact values are decimal strings");
      try {
        term.exact = ParseRational(value.get<std::string>());
      } catch (const std::exception&) {
        throw SchemaError(at + "/value", "not a decimal integer or rational");
      }
      bool counts = s.family == "brick2x4" || s.family.rfind("flat-w", 0) == 0;
      if (counts && (term.exact < 0 || term.exact.get_den() != 1)) {
        throw SchemaError(at + "/value", "counts are non-negative integers");
      }
    } else if (prov == "predicted") {
      term.provenance = Provenance::kPredicted;
      if (value.is_number()) {
        term.predicted = value.get<double>();
      } else if (value.is_string()) {
        char* end = nullptr;
        const std::string v = value.get<std::string>();
        term.predicted = std::strtod(v.c_str(), &end);
        if (end == v.c_str() || *end != '\0') throw SchemaError(at + "/value", "not a number");
      } else {
        throw SchemaError(at + "/value", "must be a number or string");
      }
    } else {
      throw SchemaError(at + "/provenance", "must be \"exact\" or \"predicted\"");
    }
    if (t.contains("sigma") && !t["sigma"].is_null()) {
      if (!t["sigma"].is_number()) throw SchemaError(at + "/sigma", "must be a number or null");
      term.sigma = t["sigma"].get<double>();
    }
    s.terms.push_back(std::move(term));
  }
  if (std::string err = s.Validate(); !err.empty()) throw SchemaError("/terms", err);
  return s;
}

CountSeries ReadSeriesFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  return SeriesFromJson(buf.str());
}

void WriteSeriesFile(const std::string& path, const CountSeries& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << SeriesToJson(s);
}

}  // namespace tilecount
