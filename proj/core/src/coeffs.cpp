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

#include "inverf/coeffs.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace inverf {

namespace {

// r_{n+1} from r_0..r_n using row n of Pascal's triangle. Terms with an even
// index are zero and skipped.
Rational next_term(const std::vector<Rational>& r, const PascalRow& row) {
  const std::size_t n = row.n();
  Rational sum = 0;
  for (std::size_t k = 1; k < n; k += 2) {
    if (r[n - k] == 0) continue;
    sum += row[k + 1] * r[k] * r[n - k];
  }
  return sum;
}

void check_index(const DerivCoefficientTable& table, std::size_t n) {
  if (n > table.max_n()) {
    throw std::out_of_range("coefficient index " + std::to_string(n) +
                            " exceeds table size " + std::to_string(table.max_n()));
  }
}

}  // namespace

const Rational& DerivCoefficientTable::r(std::size_t n) const {
  check_index(*this, n);
  return r_[n];
}

DerivCoefficientTable DerivCoefficientTable::from_rationals(std::vector<Rational> r) {
  if (r.size() < 2 || r[0] != 0 || r[1] != Rational(1, 2) || !satisfies_recurrence(r)) {
    throw std::invalid_argument("sequence is not a derivative coefficient table");
  }
  return DerivCoefficientTable(std::move(r));
}

DerivCoefficientTable build_table(std::size_t max_n) {
  if (max_n < 1) throw std::invalid_argument("build_table needs max_n >= 1");
  std::vector<Rational> r(max_n + 1);
  r[0] = 0;
  r[1] = Rational(1, 2);
  PascalRow row;
  row.advance();
  for (std::size_t n = 1; n < max_n; ++n) {
    r[n + 1] = next_term(r, row);
    row.advance();
  }
  return DerivCoefficientTable(std::move(r));
}

bool satisfies_recurrence(const std::vector<Rational>& r) {
  PascalRow row;
  row.advance();
  for (std::size_t n = 1; n + 1 < r.size(); ++n) {
    // The skip of even indices in next_term is only valid if they are zero.
    Rational sum = 0;
    for (std::size_t k = 0; k < n; ++k) sum += row[k + 1] * r[k] * r[n - k];
    if (sum != r[n + 1]) return false;
    row.advance();
  }
  return true;
}

double taylor_coefficient(const DerivCoefficientTable& table, std::size_t n,
                          double pi_value) {
  const Rational scaled = table.r(n) / Rational(factorial(n));
  if (scaled == 0) return 0.0;
  return to_double(scaled) * std::pow(pi_value, 0.5 * static_cast<double>(n));
}

double dn_float(const DerivCoefficientTable& table, std::size_t n) {
  const Rational& r = table.r(n);
  if (r == 0) return 0.0;
  const double log_value =
      log_abs(r) + 0.5 * static_cast<double>(n) * std::log(std::numbers::pi);
  if (log_value > std::log(std::numeric_limits<double>::max())) {
    return std::numeric_limits<double>::infinity();
  }
  return to_double(r) * std::pow(std::numbers::pi, 0.5 * static_cast<double>(n));
}

std::vector<double> taylor_coefficients_float(std::size_t max_n) {
  if (max_n < 1) throw std::invalid_argument("taylor_coefficients_float needs max_n >= 1");
  std::vector<double> a(max_n + 1, 0.0);
  a[1] = 0.5 * std::sqrt(std::numbers::pi);
  for (std::size_t n = 1; n < max_n; ++n) {
    double sum = 0.0;
    for (std::size_t k = 1; k < n; k += 2) {
      sum += static_cast<double>(n - k) / static_cast<double>(k + 1) * a[k] * a[n - k];
    }
    a[n + 1] = std::sqrt(std::numbers::pi) / static_cast<double>(n + 1) * sum;
  }
  return a;
}

}  // namespace inverf
