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

#include "inverf/exact.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace inverf {

Rational make_rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  BigInt num;
  BigInt den = 1;
  if (num.set_str(text.substr(0, slash), 10) != 0) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  if (slash != std::string::npos && den.set_str(text.substr(slash + 1), 10) != 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  return make_rational(num, den);
}

BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

void PascalRow::advance() {
  row_.push_back(1);
  for (std::size_t k = row_.size() - 2; k > 0; --k) row_[k] += row_[k - 1];
}

namespace {

// value = mantissa * 2^exponent with 0.5 <= |mantissa| < 1.
struct Split {
  double mantissa;
  long exponent;
};

Split split(const BigInt& v) {
  long e = 0;
  const double m = mpz_get_d_2exp(&e, v.get_mpz_t());
  return {m, e};
}

double combine(double mantissa, long exponent) {
  if (exponent > std::numeric_limits<int>::max()) {
    return std::copysign(std::numeric_limits<double>::infinity(), mantissa);
  }
  if (exponent < std::numeric_limits<int>::min()) return std::copysign(0.0, mantissa);
  return std::ldexp(mantissa, static_cast<int>(exponent));
}

}  // namespace

double to_double(const BigInt& value) {
  const Split s = split(value);
  return combine(s.mantissa, s.exponent);
}

double to_double(const Rational& value) {
  const Split n = split(value.get_num());
  const Split d = split(value.get_den());
  return combine(n.mantissa / d.mantissa, n.exponent - d.exponent);
}

double log_abs(const BigInt& value) {
  if (value == 0) return -std::numeric_limits<double>::infinity();
  const Split s = split(value);
  return std::log(std::fabs(s.mantissa)) + static_cast<double>(s.exponent) * std::log(2.0);
}

double log_abs(const Rational& value) {
  return log_abs(value.get_num()) - log_abs(value.get_den());
}

}  // namespace inverf
