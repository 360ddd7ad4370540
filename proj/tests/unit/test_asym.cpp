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

#include "inverf/asym.hpp"
#include "inverf/carlitz.hpp"
#include "inverf/coeffs.hpp"
#include "oracles.hpp"

using namespace inverf;

namespace {

// Direct transcription of Phi in long double, for moderate arguments.
long double phi_direct(long double x, std::size_t n) {
  const long double one_minus = 1.0L - std::erf(x / std::sqrt(2.0L));
  const long double base =
      std::sqrt(2.0L / std::numbers::pi_v<long double>) * std::exp(-x * x / 2) / one_minus;
  return std::pow(base, static_cast<long double>(n + 1)) /
         std::sqrt(2.0L * std::log((n + 1) / one_minus));
}

}  // namespace

TEST_CASE("Mills-ratio function") {
  CHECK(a_mills(0.0) == doctest::Approx(std::sqrt(2.0 / std::numbers::pi)).epsilon(1e-15));
  CHECK(a_mills(10.0) == doctest::Approx(10.098093233962512).epsilon(1e-13));
  const long double oracle10 = std::sqrt(2.0L / std::numbers::pi_v<long double>) /
                               oracle::erfcx_quadrature(10.0L / std::sqrt(2.0L));
  CHECK(a_mills(10.0) == doctest::Approx(static_cast<double>(oracle10)).epsilon(1e-13));
  CHECK(log_a_mills(-20.0) == doctest::Approx(-200.91893853320467).epsilon(1e-14));
  CHECK(a_mills(-20.0) == doctest::Approx(std::exp(-200.91893853320467)).epsilon(1e-12));

  for (double x : {5.0, 7.5, 10.0, 20.0, 50.0, 100.0}) {
    CHECK(std::fabs(a_mills(x) - x - 1.0 / x) <= 2.0 / (x * x * x));
  }
  CHECK(std::isfinite(a_mills(1e6)));
  CHECK(log_a_mills(3.0) == doctest::Approx(std::log(a_mills(3.0))).epsilon(1e-15));
}

TEST_CASE("Phi in log space") {
  SUBCASE("x = 0 collapses to sqrt(2/pi)^(n+1) / sqrt(2 ln(n+1))") {
    const auto v = phi(0.0, 9);
    CHECK(v.sign == 1);
    CHECK(v.log_magnitude == doctest::Approx(-3.0215033393512249).epsilon(1e-14));
  }
  SUBCASE("x = 1, n = 10") {
    CHECK(phi(1.0, 10).log_magnitude == doctest::Approx(3.6634630047559102).epsilon(1e-13));
  }
  SUBCASE("x = 30 does not overflow") {
    const auto v = phi(30.0, 10);
    CHECK(std::isfinite(v.log_magnitude));
    CHECK(v.log_magnitude == doctest::Approx(34.017511160245555).epsilon(1e-12));
  }
  SUBCASE("agrees with the direct formula on [-3, 3], n <= 20") {
    for (int i = -30; i <= 30; ++i) {
      const double x = i / 10.0;
      for (std::size_t n = 1; n <= 20; ++n) {
        const double direct = static_cast<double>(phi_direct(x, n));
        CHECK(phi(x, n).value() == doctest::Approx(direct).epsilon(1e-10));
      }
    }
  }
  CHECK_THROWS_AS(phi(0.0, 0), std::invalid_argument);
}

TEST_CASE("symmetrized approximant") {
  const auto p10 = build_pn(10).back();
  SUBCASE("n = 10, x = 2 within 2% of the exact polynomial") {
    const double exact = p10.evaluate(2.0);
    const double approx = pn_asymptotic(2.0, 10).value();
    CHECK(std::fabs(approx / exact - 1.0) < 0.02);
  }
  SUBCASE("odd n vanishes at the origin") {
    const auto v = pn_asymptotic(0.0, 9);
    CHECK(v.sign == 0);
    CHECK(v.value() == 0.0);
  }
  SUBCASE("reflection is exact in the log/sign representation") {
    for (std::size_t n : {1u, 2u, 9u, 10u, 25u, 200u}) {
      for (double x : {0.1, 0.7, 2.0, 5.5}) {
        const auto plus = pn_asymptotic(x, n);
        const auto minus = pn_asymptotic(-x, n);
        CHECK(plus.log_magnitude == minus.log_magnitude);
        CHECK(minus.sign == (n % 2 == 0 ? plus.sign : -plus.sign));
      }
    }
  }
  SUBCASE("n! scale stays finite past the double range") {
    const auto v = pn_asymptotic(1.0, 400);
    CHECK(std::isfinite(v.log_magnitude));
    CHECK(v.log_magnitude > std::log(1e308));
  }
}

TEST_CASE("d_n / n! asymptotics") {
  CHECK(dn_over_nfact_asym(4) == 0.0);
  CHECK(dn_over_nfact_asym(9) == doctest::Approx(1.0 / (9.0 * std::sqrt(std::log(9.0)))));
  CHECK(dn_over_nfact_asym(9) == doctest::Approx(0.074961).epsilon(1e-5));
  CHECK_THROWS_AS(dn_over_nfact_asym(1), std::invalid_argument);

  const auto t = build_table(199);
  CHECK(taylor_coefficient(t, 9) / dn_over_nfact_asym(9) == doctest::Approx(0.8666).epsilon(5e-4));
  double previous = 0.0;
  for (std::size_t n = 9; n <= 199; n += 2) {
    const double ratio = taylor_coefficient(t, n) / dn_over_nfact_asym(n);
    CHECK(ratio > previous);
    CHECK(ratio > 0.86);
    CHECK(ratio < 1.0);
    previous = ratio;
  }
  // regression anchors
  CHECK(taylor_coefficient(t, 9) / dn_over_nfact_asym(9) ==
        doctest::Approx(0.86660899838210641).epsilon(1e-12));
  CHECK(previous == doctest::Approx(0.97463596343555943).epsilon(1e-12));
}

TEST_CASE("Lambert W0") {
  CHECK(lambert_w0(0.0) == 0.0);
  CHECK(lambert_w0(std::numbers::e) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(lambert_w0(10.0) == doctest::Approx(1.7455280027406994).epsilon(1e-15));
  for (int i = 0; i <= 160; ++i) {
    const double u = std::pow(10.0, -8.0 + i / 10.0);
    const double w = lambert_w0(u);
    CHECK(std::fabs(w * std::exp(w) - u) <= 1e-14 * std::max(1.0, u));
  }
  CHECK_THROWS_AS(lambert_w0(-0.1), std::domain_error);
  CHECK_THROWS_AS(lambert_w0(std::nan("")), std::domain_error);
}

TEST_CASE("boundary approximant") {
  CHECK(inverf_boundary(0.999) == doctest::Approx(2.32675).epsilon(0.01));
  CHECK(inverf_boundary(0.999) == doctest::Approx(2.3418867261937366).epsilon(1e-13));
  CHECK(inverf_boundary(0.9999) == doctest::Approx(2.7608744909808711).epsilon(1e-13));
  double previous = 0.0;
  for (double gap = 0.5; gap > 1e-15; gap /= 3) {
    const double v = inverf_boundary(1.0 - gap);
    CHECK(v > previous);
    previous = v;
  }
  CHECK(previous > 5.0);
  CHECK_THROWS_AS(inverf_boundary(0.0), std::domain_error);
  CHECK_THROWS_AS(inverf_boundary(1.0), std::domain_error);
  CHECK_THROWS_AS(inverf_boundary(-0.5), std::domain_error);
}
