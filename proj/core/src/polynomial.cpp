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

#include "inverf/polynomial.hpp"

#include <algorithm>

namespace inverf {

IntPolynomial::IntPolynomial(std::vector<BigInt> by_power) : coeffs_(std::move(by_power)) {
  if (coeffs_.empty()) coeffs_.push_back(0);
  trim();
}

void IntPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::at_power(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

BigInt IntPolynomial::c(std::size_t k) const {
  if (2 * k > degree()) return 0;
  return coeffs_[degree() - 2 * k];
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() == 1) return IntPolynomial();
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t p = 1; p < coeffs_.size(); ++p) d[p - 1] = coeffs_[p] * static_cast<unsigned long>(p);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::times_x(const BigInt& scale) const {
  std::vector<BigInt> out(coeffs_.size() + 1);
  out[0] = 0;
  for (std::size_t p = 0; p < coeffs_.size(); ++p) out[p + 1] = coeffs_[p] * scale;
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t p = 0; p < other.coeffs_.size(); ++p) coeffs_[p] += other.coeffs_[p];
  trim();
  return *this;
}

bool IntPolynomial::has_parity_structure() const {
  const std::size_t n = degree();
  for (std::size_t p = 0; p <= n; ++p) {
    if ((n - p) % 2 == 1 && coeffs_[p] != 0) return false;
  }
  return true;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

}  // namespace inverf
