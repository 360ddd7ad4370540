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

#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace inverf::oracle {

namespace {

using Series = std::vector<Rational>;

Series multiply(const Series& a, const Series& b, std::size_t degree) {
  Series out(degree + 1, Rational(0));
  for (std::size_t i = 0; i < a.size() && i <= degree; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= degree; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series reciprocal(const Series& a, std::size_t degree) {
  Series out(degree + 1, Rational(0));
  out[0] = 1 / a[0];
  for (std::size_t n = 1; n <= degree; ++n) {
    Rational s = 0;
    for (std::size_t k = 1; k <= n && k < a.size(); ++k) s += a[k] * out[n - k];
    out[n] = -s / a[0];
  }
  return out;
}

}  // namespace

std::vector<Rational> lagrange_erf_rationals(std::size_t max_n) {
  // psi(w) = sum_m (-1)^m w^(2m) / (m! (2m+1))
  Series psi(max_n + 1, Rational(0));
  BigInt m_fact = 1;
  for (std::size_t m = 0; 2 * m <= max_n; ++m) {
    if (m > 0) m_fact *= static_cast<unsigned long>(m);
    Rational term(BigInt(1), m_fact * static_cast<unsigned long>(2 * m + 1));
    psi[2 * m] = m % 2 == 0 ? term : Rational(-term);
  }
  const Series inv = reciprocal(psi, max_n);

  std::vector<Rational> r(max_n + 1, Rational(0));
  Series power{Rational(1)};
  BigInt n_fact = 1;
  BigInt two_pow = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    power = multiply(power, inv, max_n);
    n_fact *= static_cast<unsigned long>(n);
    two_pow *= 2;
    const Rational b = power[n - 1] / Rational(static_cast<long>(n));
    r[n] = b * Rational(n_fact) / Rational(two_pow);
  }
  return r;
}

std::vector<Rational> nested_derivative_bruteforce(const std::vector<Rational>& f, std::size_t n) {
  Series d{Rational(1)};
  for (std::size_t step = 0; step < n; ++step) {
    const Series product = multiply(d, f, d.size() + f.size());
    Series next(product.size() > 1 ? product.size() - 1 : 1, Rational(0));
    for (std::size_t p = 1; p < product.size(); ++p) {
      next[p - 1] = product[p] * Rational(static_cast<long>(p));
    }
    d = std::move(next);
  }
  return d;
}

long double inverf_newton_ld(long double z) {
  const long double half_sqrt_pi = std::sqrt(std::numbers::pi_v<long double>) / 2;
  long double y = 0;
  for (int i = 0; i < 200; ++i) {
    const long double step = (z - std::erf(y)) * half_sqrt_pi * std::exp(y * y);
    y += step;
    if (std::fabs(step) <= 4 * std::numeric_limits<long double>::epsilon() * std::fabs(y)) break;
  }
  return y;
}

long double derivative_by_differences(std::size_t n, long double h, int levels, long double ratio) {
  auto central = [n](long double step) {
    long double sum = 0;
    long double binom = 1;
    for (std::size_t i = 0; i <= n; ++i) {
      const long double point = (static_cast<long double>(n) / 2 - static_cast<long double>(i)) * step;
      sum += (i % 2 == 0 ? binom : -binom) * inverf_newton_ld(point);
      binom = binom * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
    }
    return sum / std::pow(step, static_cast<long double>(n));
  };
  std::vector<long double> column;
  for (int l = 0; l <= levels; ++l) column.push_back(central(h / std::pow(ratio, l)));
  for (int k = 1; k <= levels; ++k) {
    const long double factor = std::pow(ratio, 2.0L * k);
    for (std::size_t i = column.size() - 1; i >= static_cast<std::size_t>(k); --i) {
      column[i] = (factor * column[i] - column[i - 1]) / (factor - 1);
    }
  }
  return column.back();
}

long double erfcx_quadrature(long double x) {
  // Past s = min(10, 50/x) the integrand is below exp(-100).
  const long double upper = x > 5 ? 50 / x : 10;
  const int panels = 200000;
  const long double h = upper / panels;
  auto g = [x](long double s) { return std::exp(-s * s - 2 * x * s); };
  long double sum = g(0) + g(upper);
  for (int i = 1; i < panels; ++i) sum += (i % 2 == 1 ? 4 : 2) * g(i * h);
  return 2 / std::sqrt(std::numbers::pi_v<long double>) * sum * h / 3;
}

}  // namespace inverf::oracle
