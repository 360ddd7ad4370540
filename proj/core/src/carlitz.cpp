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

#include "inverf/carlitz.hpp"

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

#include <map>
#include <stdexcept>
#include <string>

namespace inverf {

std::vector<IntPolynomial> build_pn(std::size_t n_max) {
  std::vector<IntPolynomial> p;
  p.reserve(n_max + 1);
  p.emplace_back(std::vector<BigInt>{1});
  for (std::size_t n = 0; n < n_max; ++n) {
    IntPolynomial next = p.back().derivative();
    next += p.back().times_x(BigInt(static_cast<unsigned long>(n + 1)));
    p.push_back(std::move(next));
  }
  return p;
}

BigInt coefficient_oracle_c1(std::size_t n) {
  if (n < 2) throw std::invalid_argument("C_1^n is defined for n >= 2");
  Rational sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    sum += Rational(static_cast<long>(j), static_cast<long>(j + 1));
  }
  const Rational value = sum * Rational(factorial(n));
  if (value.get_den() != 1) throw std::logic_error("C_1^n is not an integer");
  return value.get_num();
}

namespace {

// S(level, bound) = sum_{j=0}^{bound-1} w(level, j) * S(level-1, j), S(0, .) = 1,
// with w(i, j) = (j - 2i + 2)/(j + 1).
class NestedSum {
 public:
  Rational at(std::size_t level, std::size_t bound) {
    if (level == 0) return 1;
    const auto key = std::make_pair(level, bound);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Rational sum = 0;
    for (std::size_t j = 0; j < bound; ++j) {
      const long weight_num = static_cast<long>(j) - 2 * static_cast<long>(level) + 2;
      if (weight_num == 0) continue;
      sum += Rational(weight_num, static_cast<long>(j + 1)) * at(level - 1, j);
    }
    memo_.emplace(key, sum);
    return sum;
  }

 private:
  std::map<std::pair<std::size_t, std::size_t>, Rational> memo_;
};

}  // namespace

BigInt coefficient_oracle_ck(std::size_t n, std::size_t k) {
  if (n > kNestedSumOracleMaxN) {
    throw std::invalid_argument("nested-sum oracle is capped at n <= " +
                                std::to_string(kNestedSumOracleMaxN));
  }
  if (k < 1 || 2 * k > n) {
    throw std::invalid_argument("k=" + std::to_string(k) + " outside [1, n/2] for n=" +
                                std::to_string(n));
  }
  NestedSum sums;
  const Rational value = sums.at(k, n) * Rational(factorial(n));
  if (value.get_den() != 1) throw std::logic_error("C_k^n is not an integer");
  return value.get_num();
}

BigInt pn_at_zero(std::size_t n) { return build_pn(n).back().at_power(0); }

std::vector<std::complex<double>> roots(std::size_t n, std::size_t degree_cap) {
  if (n == 0) throw std::invalid_argument("P_0 has no roots");
  if (n > degree_cap) {
    throw std::invalid_argument("degree " + std::to_string(n) + " exceeds root-finding cap " +
                                std::to_string(degree_cap));
  }
  const IntPolynomial p = build_pn(n).back();
  const Rational lead(factorial(n));
  Eigen::VectorXd monic(n + 1);
  for (std::size_t power = 0; power <= n; ++power) {
    monic[static_cast<Eigen::Index>(power)] = to_double(Rational(p.at_power(power)) / lead);
  }
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(monic);
  const auto& found = solver.roots();
  return {found.begin(), found.end()};
}

}  // namespace inverf
