// Copyright 2026 The inverf Authors
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

#include "inverf/serialize.hpp"

#include <json.hpp>

#include <stdexcept>
#include <vector>

namespace inverf {

using Json = nlohmann::ordered_json;

std::string table_to_json(const DerivCoefficientTable& table, int indent) {
  Json rows = Json::array();
  for (std::size_t n = 0; n <= table.max_n(); ++n) {
    const Rational& r = table.r(n);
    rows.push_back({{"n", n}, {"numerator", r.get_num().get_str()},
                    {"denominator", r.get_den().get_str()}});
  }
  return rows.dump(indent);
}

DerivCoefficientTable table_from_json(std::string_view text) {
  try {
    const Json rows = Json::parse(text);
    if (!rows.is_array()) throw std::invalid_argument("table JSON must be an array");
    std::vector<Rational> r;
    r.reserve(rows.size());
    for (const auto& row : rows) {
      if (row.at("n").get<std::size_t>() != r.size()) {
        throw std::invalid_argument("table rows must be numbered 0, 1, 2, ...");
      }
      r.push_back(make_rational(BigInt(row.at("numerator").get<std::string>()),
                                BigInt(row.at("denominator").get<std::string>())));
    }
    return DerivCoefficientTable::from_rationals(std::move(r));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad table JSON: ") + e.what());
  }
}

std::string polynomial_to_json(std::size_t n, const IntPolynomial& p, int indent) {
  Json coefficients = Json::array();
  for (std::size_t power = 0; power <= p.degree(); ++power) {
    const BigInt c = p.at_power(power);
    if (c == 0) continue;
    coefficients.push_back({{"power", power}, {"value", c.get_str()}});
  }
  return Json{{"n", n}, {"coefficients", coefficients}}.dump(indent);
}

std::pair<std::size_t, IntPolynomial> polynomial_from_json(std::string_view text) {
  try {
    const Json doc = Json::parse(text);
    const auto n = doc.at("n").get<std::size_t>();
    std::vector<BigInt> by_power(n + 1, BigInt(0));
    for (const auto& c : doc.at("coefficients")) {
      const auto power = c.at("power").get<std::size_t>();
      if (power > n) throw std::invalid_argument("coefficient power exceeds n");
      by_power[power] = BigInt(c.at("value").get<std::string>());
    }
    return {n, IntPolynomial(std::move(by_power))};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad polynomial JSON: ") + e.what());
  }
}

}  // namespace inverf
