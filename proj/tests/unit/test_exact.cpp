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

#include <doctest.h>

#include <cmath>
#include <limits>

#include "inverf/exact.hpp"

using namespace inverf;

TEST_CASE("rationals are kept in lowest terms with a positive denominator") {
  const Rational q = make_rational(BigInt(6), BigInt(-4));
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("4369/32") == Rational(4369, 32));
  CHECK(parse_rational("-12") == Rational(-12));
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("Pascal row reuse matches factorial binomials") {
  PascalRow row;
  for (int i = 0; i < 30; ++i) row.advance();
  REQUIRE(row.n() == 30);
  for (unsigned long k = 0; k <= 30; ++k) {
    CHECK(row[k] == factorial(30) / (factorial(k) * factorial(30 - k)));
  }
}

TEST_CASE("double conversion survives huge and tiny operands") {
  CHECK(to_double(Rational(1, 3)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  const BigInt huge = factorial(400);
  CHECK(std::isinf(to_double(huge)));
  CHECK(to_double(Rational(BigInt(1), huge)) == 0.0);
  CHECK(to_double(Rational(factorial(300), factorial(299))) == doctest::Approx(300.0));
  CHECK(log_abs(huge) == doctest::Approx(std::lgamma(401.0)).epsilon(1e-14));
  CHECK(log_abs(BigInt(0)) == -std::numeric_limits<double>::infinity());
}
