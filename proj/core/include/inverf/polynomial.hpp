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
#include <vector>

#include "inverf/exact.hpp"

namespace inverf {

/// Polynomial with exact integer coefficients, stored densely by power.
///
/// The families built here (P_n and g_n) have degree n and contain only
/// powers with the parity of n, so they are also addressed by the index k of
/// the coefficient of x^(n-2k).
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{0} {}
  explicit IntPolynomial(std::vector<BigInt> by_power);

  /// Degree of the highest nonzero coefficient (0 for the zero polynomial).
  std::size_t degree() const { return coeffs_.size() - 1; }

  /// Coefficient of x^power; zero beyond the degree.
  BigInt at_power(std::size_t power) const;

  /// Coefficient of x^(degree - 2k), i.e. C_k^n for P_n.
  BigInt c(std::size_t k) const;

  const std::vector<BigInt>& by_power() const { return coeffs_; }

  IntPolynomial derivative() const;

  /// Multiplies by scale * x.
  IntPolynomial times_x(const BigInt& scale) const;

  IntPolynomial& operator+=(const IntPolynomial& other);

  /// True when every nonzero coefficient sits at a power of the same parity as
  /// the degree, i.e. p(-x) = (-1)^degree p(x).
  bool has_parity_structure() const;

  double evaluate(double x) const;
  Rational evaluate(const Rational& x) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

}  // namespace inverf
