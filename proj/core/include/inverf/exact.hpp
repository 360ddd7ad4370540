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

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace inverf {

// Arbitrary-precision integer and rational. mpq_class keeps values in lowest
// terms with a positive denominator after every arithmetic operation.
using BigInt = mpz_class;
using Rational = mpq_class;

// Builds a canonical rational from a numerator/denominator pair.
// Throws std::invalid_argument if the denominator is zero.
Rational make_rational(const BigInt& numerator, const BigInt& denominator);

// Parses "p" or "p/q" in base 10. Throws std::invalid_argument on bad input.
Rational parse_rational(const std::string& text);

BigInt factorial(unsigned long n);

// Rows of Pascal's triangle, advanced in place so that a single row is reused
// while walking n upwards.
class PascalRow {
 public:
  PascalRow() : row_{1} {}

  std::size_t n() const { return row_.size() - 1; }
  const BigInt& operator[](std::size_t k) const { return row_[k]; }
  const std::vector<BigInt>& coefficients() const { return row_; }

  void advance();

 private:
  std::vector<BigInt> row_;
};

// Nearest-double conversions that stay finite-safe for operands far outside
// the double range (overflow goes to +-inf, underflow to 0).
double to_double(const BigInt& value);
double to_double(const Rational& value);

// Natural log of |value|; -inf for zero.
double log_abs(const BigInt& value);
double log_abs(const Rational& value);

}  // namespace inverf
