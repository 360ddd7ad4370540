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

#include "inverf/erf.hpp"

namespace inverf {

/// sign * exp(log_magnitude); sign 0 means the value is exactly zero and
/// log_magnitude is -inf.
struct AsymptoticValue {
  double log_magnitude = 0.0;
  int sign = 0;

  double value() const;
  static AsymptoticValue zero();
};

/// Mills-ratio function A(x) = sqrt(2/pi) exp(-x^2/2) / (1 - erf(x/sqrt 2)).
/// For x >= 0 this is sqrt(2/pi) / erfcx(x/sqrt 2), so it never overflows and
/// behaves like x + 1/x for large x.
double a_mills(double x, const ErfProvider& provider = ErfProvider::standard());

/// ln A(x), finite for every finite x.
double log_a_mills(double x, const ErfProvider& provider = ErfProvider::standard());

/// Phi(x, n) = A(x)^(n+1) * [2 ln((n+1) / (1 - erf(x/sqrt 2)))]^(-1/2), in log
/// space. Throws std::invalid_argument for n < 1 and std::domain_error when the
/// logarithm's argument is not above 1.
AsymptoticValue phi(double x, std::size_t n,
                    const ErfProvider& provider = ErfProvider::standard());

/// n! [Phi(x, n) + (-1)^n Phi(-x, n)], the large-n approximant of P_n(x).
/// Evaluated through |x| so that pn_asymptotic(-x, n) differs from
/// pn_asymptotic(x, n) only by the sign factor (-1)^n.
AsymptoticValue pn_asymptotic(double x, std::size_t n,
                              const ErfProvider& provider = ErfProvider::standard());

/// d_n / n! ~ [1 + (-1)^(n-1)] / (2 n sqrt(ln n)): zero for even n and
/// 1 / (n sqrt(ln n)) for odd n. Throws std::invalid_argument for n < 2.
double dn_over_nfact_asym(std::size_t n);

/// Principal branch W0 on u >= 0 (w e^w = u) by Halley iteration.
/// Throws std::domain_error for u < 0 or NaN.
double lambert_w0(double u);

/// inverf(x) ~ sqrt(W0(2 / (pi (x-1)^2)) / 2) as x -> 1-. Throws
/// std::domain_error for x outside (0, 1).
double inverf_boundary(double x);

}  // namespace inverf
