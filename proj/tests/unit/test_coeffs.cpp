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
#include <numbers>

#include "inverf/coeffs.hpp"
#include "oracles.hpp"

using namespace inverf;

TEST_CASE("exact derivative rationals") {
  SUBCASE("max_n = 1") {
    const auto t = build_table(1);
    CHECK(t.max_n() == 1);
    CHECK(t.r(0) == 0);
    CHECK(t.r(1) == Rational(1, 2));
  }
  SUBCASE("max_n = 2 gives a vanishing even term") {
    CHECK(build_table(2).r(2) == 0);
  }
  SUBCASE("first odd values") {
    const auto t = build_table(9);
    CHECK(t.r(3) == Rational(1, 4));
    CHECK(t.r(5) == Rational(7, 8));
    CHECK(t.r(7) == Rational(127, 16));
    CHECK(t.r(9) == Rational(4369, 32));
  }
  SUBCASE("r_11 agrees with Lagrange inversion") {
    const auto lagrange = oracle::lagrange_erf_rationals(11);
    CHECK(lagrange[11] == Rational(243649, 64));
    CHECK(build_table(11).r(11) == lagrange[11]);
  }
  CHECK_THROWS_AS(build_table(0), std::invalid_argument);
}

TEST_CASE("table agrees with the Lagrange inversion oracle through n = 31") {
  const auto t = build_table(31);
  const auto lagrange = oracle::lagrange_erf_rationals(31);
  for (std::size_t n = 0; n <= 31; ++n) CHECK(t.r(n) == lagrange[n]);
}

TEST_CASE("table invariants") {
  const auto t = build_table(151);
  CHECK(satisfies_recurrence(t.rationals()));
  for (std::size_t n = 0; n <= t.max_n(); ++n) {
    if (n % 2 == 0) {
      CHECK(t.r(n) == 0);
    } else {
      CHECK(t.r(n) > 0);
    }
  }
  // r_{n+2}/r_n strictly increasing over odd n.
  Rational previous = 0;
  for (std::size_t n = 1; n + 2 <= t.max_n(); n += 2) {
    const Rational ratio = t.r(n + 2) / t.r(n);
    CHECK(ratio > previous);
    previous = ratio;
  }
}

TEST_CASE("from_rationals rejects sequences off the recurrence") {
  auto r = build_table(9).rationals();
  CHECK_NOTHROW(DerivCoefficientTable::from_rationals(r));
  r[7] += 1;
  CHECK_THROWS_AS(DerivCoefficientTable::from_rationals(r), std::invalid_argument);
  r = build_table(9).rationals();
  r[4] = Rational(1, 1000);
  CHECK_FALSE(satisfies_recurrence(r));
}

TEST_CASE("taylor_coefficient and dn_float") {
  const auto t = build_table(11);
  CHECK(taylor_coefficient(t, 1) == doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-15));
  CHECK(taylor_coefficient(t, 2) == 0.0);
  CHECK(taylor_coefficient(t, 9) == doctest::Approx(0.06495961774538541).epsilon(1e-14));
  CHECK(dn_float(t, 0) == 0.0);
  CHECK(dn_float(t, 3) == doctest::Approx(1.3920819992079270).epsilon(1e-14));
  CHECK(dn_float(t, 7) == doctest::Approx(436.22273137739957).epsilon(1e-14));
  for (std::size_t n = 1; n <= 11; ++n) {
    CHECK(dn_float(t, n) ==
          doctest::Approx(taylor_coefficient(t, n) * std::tgamma(n + 1.0)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(taylor_coefficient(t, 12), std::out_of_range);
  CHECK_THROWS_AS(dn_float(t, 12), std::out_of_range);
  // A caller-supplied pi only rescales by pi^(n/2).
  CHECK(taylor_coefficient(t, 3, 4.0) == doctest::Approx(8.0 / 24.0));
}

TEST_CASE("dn_float saturates instead of producing garbage") {
  const auto t = build_table(201);
  CHECK(std::isinf(dn_float(t, 201)));
  CHECK(std::isfinite(taylor_coefficient(t, 201)));
}

TEST_CASE("binary64 mirror of the recurrence tracks the exact table") {
  const auto t = build_table(151);
  const auto a = taylor_coefficients_float(151);
  for (std::size_t n = 0; n <= 151; ++n) {
    const double exact = taylor_coefficient(t, n);
    if (exact == 0.0) {
      CHECK(a[n] == 0.0);
    } else {
      CHECK(a[n] == doctest::Approx(exact).epsilon(1e-12));
    }
  }
}

TEST_CASE("finite differences of a Newton-inverted erf reproduce d_n") {
  const auto t = build_table(9);
  for (std::size_t n = 1; n <= 9; ++n) {
    const long double fd = oracle::derivative_by_differences(n, 0.15L, 5, 1.5L);
    const double exact = dn_float(t, n);
    if (exact == 0.0) {
      CHECK(std::fabs(static_cast<double>(fd)) < 1e-6);
    } else {
      CHECK(static_cast<double>(fd) == doctest::Approx(exact).epsilon(1e-6));
    }
  }
}
