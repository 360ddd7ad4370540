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

#include "inverf/asym.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace inverf {

namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;

// 0.5 * ln(2/pi)
const double kHalfLogTwoOverPi = 0.5 * std::log(2.0 / std::numbers::pi);

double log_factorial(std::size_t n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// ln(1 - erf(x/sqrt 2)) = ln erfc(x/sqrt 2).
double log_erfc_scaled(double x, const ErfProvider& provider) {
  const double t = x * kSqrtHalf;
  if (x >= 0.0) return std::log(provider.erfcx(t)) - 0.5 * x * x;
  return std::log(provider.erfc(t));
}

}  // namespace

double AsymptoticValue::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_magnitude);
}

AsymptoticValue AsymptoticValue::zero() {
  return {-std::numeric_limits<double>::infinity(), 0};
}

double log_a_mills(double x, const ErfProvider& provider) {
  if (x >= 0.0) return kHalfLogTwoOverPi - std::log(provider.erfcx(x * kSqrtHalf));
  return kHalfLogTwoOverPi - 0.5 * x * x - std::log(provider.erfc(x * kSqrtHalf));
}

double a_mills(double x, const ErfProvider& provider) {
  if (x >= 0.0) return std::sqrt(2.0 / std::numbers::pi) / provider.erfcx(x * kSqrtHalf);
  return std::sqrt(2.0 / std::numbers::pi) * std::exp(-0.5 * x * x) /
         provider.erfc(x * kSqrtHalf);
}

AsymptoticValue phi(double x, std::size_t n, const ErfProvider& provider) {
  if (n < 1) throw std::invalid_argument("phi needs n >= 1");
  const double np1 = static_cast<double>(n + 1);
  // ln((n+1)/erfc(x/sqrt 2)) must exceed 0 for the outer square root.
  const double log_arg = std::log(np1) - log_erfc_scaled(x, provider);
  if (!(log_arg > 0.0)) {
    throw std::domain_error("phi: logarithm argument <= 1 at x=" + std::to_string(x) +
                            ", n=" + std::to_string(n));
  }
  return {np1 * log_a_mills(x, provider) - 0.5 * std::log(2.0 * log_arg), 1};
}

AsymptoticValue pn_asymptotic(double x, std::size_t n, const ErfProvider& provider) {
  const double ax = std::fabs(x);
  const AsymptoticValue big = phi(ax, n, provider);
  const AsymptoticValue small = phi(-ax, n, provider);
  const bool odd = n % 2 == 1;

  AsymptoticValue out;
  if (odd && big.log_magnitude == small.log_magnitude) {
    out = AsymptoticValue::zero();
  } else {
    // Phi(|x|, n) >= Phi(-|x|, n) since A is increasing.
    const double ratio = std::exp(small.log_magnitude - big.log_magnitude);
    out.log_magnitude =
        big.log_magnitude + std::log1p(odd ? -ratio : ratio) + log_factorial(n);
    out.sign = 1;
  }
  if (odd && x < 0.0) out.sign = -out.sign;
  return out;
}

double dn_over_nfact_asym(std::size_t n) {
  if (n < 2) throw std::invalid_argument("dn_over_nfact_asym needs n >= 2");
  if (n % 2 == 0) return 0.0;
  const double nd = static_cast<double>(n);
  return 1.0 / (nd * std::sqrt(std::log(nd)));
}

double lambert_w0(double u) {
  if (!(u >= 0.0)) throw std::domain_error("lambert_w0 needs u >= 0");
  if (u == 0.0) return 0.0;
  if (std::isinf(u)) return u;

  double w;
  if (u > std::numbers::e) {
    const double l = std::log(u);
    w = l - std::log(l);
  } else if (u < 0.25) {
    w = u * (1.0 - u);
  } else {
    w = std::log1p(u);
  }

  for (int iter = 0; iter < 64; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - u;
    const double wp1 = w + 1.0;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::fabs(step) <= 1e-16 * std::fabs(w) || f == 0.0) break;
  }
  return w;
}

double inverf_boundary(double x) {
  if (!(x > 0.0 && x < 1.0)) throw std::domain_error("inverf_boundary needs 0 < x < 1");
  const double gap = 1.0 - x;
  return std::sqrt(0.5 * lambert_w0(2.0 / (std::numbers::pi * gap * gap)));
}

}  // namespace inverf
