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

#include "inverf/nested.hpp"

#include <cmath>
#include <numbers>

namespace inverf {

SeriesFunction<Rational> exp_square_series(std::size_t count) {
  SeriesFunction<Rational> f;
  f.x0 = 0;
  f.coeffs.assign(count, Rational(0));
  BigInt j_factorial = 1;
  for (std::size_t j = 0; 2 * j < count; ++j) {
    if (j > 0) j_factorial *= static_cast<unsigned long>(j);
    f.coeffs[2 * j] = Rational(BigInt(1), j_factorial);
  }
  return f;
}

SeriesFunction<double> erf_reciprocal_derivative_series(std::size_t count) {
  SeriesFunction<double> f;
  f.x0 = 0.0;
  f.coeffs.assign(count, 0.0);
  double term = 0.5 * std::sqrt(std::numbers::pi);
  for (std::size_t j = 0; 2 * j < count; ++j) {
    if (j > 0) term /= static_cast<double>(j);
    f.coeffs[2 * j] = term;
  }
  return f;
}

std::vector<Rational> erf_rationals_by_nested(std::size_t max_n) {
  if (max_n < 1) throw std::invalid_argument("erf_rationals_by_nested needs max_n >= 1");
  const auto table = nested_table(exp_square_series(max_n), max_n - 1, 0);
  std::vector<Rational> r(max_n + 1);
  r[0] = 0;
  BigInt two_pow = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    two_pow *= 2;
    r[n] = table.value(n - 1) / Rational(two_pow);
  }
  return r;
}

std::vector<IntPolynomial> g_sequence(std::size_t n_max) {
  std::vector<IntPolynomial> g;
  g.reserve(n_max + 1);
  g.emplace_back(std::vector<BigInt>{1});
  for (std::size_t n = 0; n < n_max; ++n) {
    IntPolynomial next = g.back().derivative();
    next += g.back().times_x(BigInt(static_cast<unsigned long>(2 * (n + 1))));
    g.push_back(std::move(next));
  }
  return g;
}

}  // namespace inverf
