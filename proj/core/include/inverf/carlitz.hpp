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

#include <complex>
#include <cstddef>
#include <vector>

#include "inverf/exact.hpp"
#include "inverf/polynomial.hpp"

namespace inverf {

/// P_0..P_n_max with P_0 = 1 and P_{n+1} = P_n' + (n+1) x P_n.
///
/// P_n has degree n, leading coefficient n!, positive coefficients and only
/// powers of the parity of n. It relates to the derivatives of inverf by
/// d_n = 2^(-1/2) (pi/2)^(n/2) P_{n-1}(0).
std::vector<IntPolynomial> build_pn(std::size_t n_max);

/// C_1^n = n! * sum_{j=0}^{n-1} j/(j+1), summed in exact rationals.
/// Throws std::invalid_argument for n < 2.
BigInt coefficient_oracle_c1(std::size_t n);

/// C_k^n from the nested-sum closed form
///   C_k^n = n! sum_{j_k<n} sum_{j_{k-1}<j_k} ... sum_{j_1<j_2}
///           prod_i (j_i - 2i + 2)/(j_i + 1),
/// evaluated with memoized inner sums. Independent of the recurrence in
/// build_pn; meant for validation only and capped at n <= 12.
/// Throws std::invalid_argument for k outside [1, n/2] or n > 12.
BigInt coefficient_oracle_ck(std::size_t n, std::size_t k);

inline constexpr std::size_t kNestedSumOracleMaxN = 12;

/// Constant term P_n(0) (zero for odd n).
BigInt pn_at_zero(std::size_t n);

inline constexpr std::size_t kRootDegreeCap = 30;

/// All n roots of P_n from the eigenvalues of the balanced companion matrix
/// of P_n / n!. Throws std::invalid_argument for n == 0 or n > degree_cap.
std::vector<std::complex<double>> roots(std::size_t n, std::size_t degree_cap = kRootDegreeCap);

}  // namespace inverf
