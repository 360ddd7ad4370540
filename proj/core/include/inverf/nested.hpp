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

#pragma once

// Series inversion by nested derivatives.
//
// For h with inverse H, f = 1/h' and z0 = h(x0),
//   H(z) = x0 + f(x0) * sum_{n>=1} D^{n-1}[f](x0) (z - z0)^n / n!,
// where D^0[f] = 1 and D^{n+1}[f] = (f * D^n[f])'.
//
// Coefficient convention: every series here holds PLAIN Taylor coefficients,
// i.e. the coefficient of (x - x0)^k, without a k! divisor. Only in that
// convention does the row recursion
//   A_k^{n+1} = (k+1) * sum_{j=0}^{k+1} A_{k+1-j}^n B_j
// hold as written. Column 0 is the value D^n[f](x0) in either convention.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "inverf/exact.hpp"
#include "inverf/polynomial.hpp"

namespace inverf {

/// Taylor expansion of f about x0: f(x) = sum_k coeffs[k] (x - x0)^k.
template <class Scalar>
struct SeriesFunction {
  Scalar x0{};
  std::vector<Scalar> coeffs;
};

/// Triangular table A[n][k]: plain Taylor coefficients of D^n[f] about x0.
/// Row n holds k_max + n_max - n + 1 columns.
template <class Scalar>
struct NestedDerivTable {
  std::vector<std::vector<Scalar>> rows;

  std::size_t n_max() const { return rows.size() - 1; }
  /// D^n[f](x0).
  const Scalar& value(std::size_t n) const { return rows.at(n).at(0); }
};

/// Derivatives of the inverse about z0: derivatives[i] = H^(i+1)(z0).
template <class Scalar>
struct InverseSeries {
  Scalar z0{};
  Scalar value{};  // H(z0) = x0
  std::vector<Scalar> derivatives;
};

/// Builds A[0..n_max][0..k_max]. Needs f.coeffs through index k_max + n_max;
/// throws std::invalid_argument otherwise (no silent zero padding).
template <class Scalar>
NestedDerivTable<Scalar> nested_table(const SeriesFunction<Scalar>& f, std::size_t n_max,
                                      std::size_t k_max) {
  const std::size_t width = k_max + n_max + 1;
  if (f.coeffs.size() < width) {
    throw std::invalid_argument("nested_table needs " + std::to_string(width) +
                                " input coefficients, got " +
                                std::to_string(f.coeffs.size()));
  }
  const auto& b = f.coeffs;

  NestedDerivTable<Scalar> table;
  table.rows.reserve(n_max + 1);
  std::vector<Scalar> row(width, Scalar(0));
  row[0] = Scalar(1);
  table.rows.push_back(row);

  for (std::size_t n = 0; n < n_max; ++n) {
    const auto& prev = table.rows.back();
    std::vector<Scalar> next(prev.size() - 1, Scalar(0));
    for (std::size_t k = 0; k < next.size(); ++k) {
      Scalar sum(0);
      for (std::size_t j = 0; j <= k + 1; ++j) sum += prev[k + 1 - j] * b[j];
      next[k] = Scalar(static_cast<long>(k + 1)) * sum;
    }
    table.rows.push_back(std::move(next));
  }
  return table;
}

/// Derivatives H'(z0), ..., H^(n_terms)(z0) of the inverse of h, given the
/// series of f = 1/h' about x0. Throws std::invalid_argument when n_terms == 0
/// or f(x0) == 0.
template <class Scalar>
InverseSeries<Scalar> invert_series(const SeriesFunction<Scalar>& f, const Scalar& z0,
                                    std::size_t n_terms) {
  if (n_terms == 0) throw std::invalid_argument("invert_series needs n_terms >= 1");
  if (f.coeffs.empty() || f.coeffs[0] == Scalar(0)) {
    throw std::invalid_argument("invert_series needs f(x0) != 0");
  }
  const auto table = nested_table(f, n_terms - 1, 0);
  InverseSeries<Scalar> out;
  out.z0 = z0;
  out.value = f.x0;
  out.derivatives.reserve(n_terms);
  for (std::size_t n = 1; n <= n_terms; ++n) {
    out.derivatives.push_back(f.coeffs[0] * table.value(n - 1));
  }
  return out;
}

/// Plain Taylor coefficients of exp(x^2) about 0 through index `count - 1`.
SeriesFunction<Rational> exp_square_series(std::size_t count);

/// f = 1/erf' = (sqrt(pi)/2) exp(x^2) about 0, in binary64.
SeriesFunction<double> erf_reciprocal_derivative_series(std::size_t count);

/// r_0..r_max_n (d_n = r_n pi^(n/2)) obtained through nested derivatives of
/// exp(x^2): r_n = D^{n-1}[exp(x^2)](0) / 2^n. Exact.
std::vector<Rational> erf_rationals_by_nested(std::size_t max_n);

/// g_0..g_n_max with g_0 = 1 and g_{n+1} = g_n' + 2(n+1) x g_n, so that
/// D^n[f] = f^n g_n for f = (sqrt(pi)/2) exp(x^2). Integer coefficients.
std::vector<IntPolynomial> g_sequence(std::size_t n_max);

}  // namespace inverf
