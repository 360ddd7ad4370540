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

#include <cstddef>
#include <numbers>
#include <vector>

#include "inverf/exact.hpp"

namespace inverf {

inline constexpr std::size_t kDefaultTableSize = 101;

/// Exact derivatives of inverf at the origin.
///
/// The n-th derivative is d_n = r_n * pi^(n/2) with r_n rational, so the table
/// stores only r_0..r_max_n. r_0 = 0, r_1 = 1/2, every even r_n vanishes and
/// every odd r_n is positive. A built table is immutable and may be shared
/// between threads.
class DerivCoefficientTable {
 public:
  std::size_t max_n() const { return r_.size() - 1; }

  /// Rational part r_n. Throws std::out_of_range for n > max_n().
  const Rational& r(std::size_t n) const;
  const std::vector<Rational>& rationals() const { return r_; }

  /// Wraps an existing sequence, e.g. one read back from JSON. The values are
  /// checked against the recurrence; std::invalid_argument if they disagree.
  static DerivCoefficientTable from_rationals(std::vector<Rational> r);

 private:
  friend DerivCoefficientTable build_table(std::size_t max_n);
  explicit DerivCoefficientTable(std::vector<Rational> r) : r_(std::move(r)) {}

  std::vector<Rational> r_;
};

/// Runs r_{n+1} = sum_{k=0}^{n-1} C(n,k+1) r_k r_{n-k} from r_0 = 0, r_1 = 1/2.
/// O(max_n^2) big-rational multiply-adds. Throws std::invalid_argument for
/// max_n < 1.
DerivCoefficientTable build_table(std::size_t max_n = kDefaultTableSize);

/// True when every entry r_2..r_max_n satisfies the recurrence exactly.
bool satisfies_recurrence(const std::vector<Rational>& r);

/// Taylor coefficient d_n / n! = (r_n / n!) * pi_value^(n/2). The quotient is
/// formed exactly and rounded once before the power of pi is applied.
double taylor_coefficient(const DerivCoefficientTable& table, std::size_t n,
                          double pi_value = std::numbers::pi);

/// d_n in binary64; +inf once d_n leaves the double range (around n = 170).
double dn_float(const DerivCoefficientTable& table, std::size_t n);

/// Binary64 mirror of the recurrence, written for the Taylor coefficients
/// a_n = d_n / n! so nothing overflows:
///   a_{n+1} = sqrt(pi)/(n+1) * sum_{k=0}^{n-1} (n-k)/(k+1) * a_k * a_{n-k}.
/// Every term is non-negative, so there is no cancellation. Intended for
/// benchmarking; the exact table is the reference.
std::vector<double> taylor_coefficients_float(std::size_t max_n);

}  // namespace inverf
