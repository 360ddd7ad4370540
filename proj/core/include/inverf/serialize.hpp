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
#include <string>
#include <string_view>

#include "inverf/coeffs.hpp"
#include "inverf/polynomial.hpp"

namespace inverf {

// JSON wire formats. Big integers travel as base-10 strings so nothing is
// rounded.
//
//   table:      [{"n": 0, "numerator": "0", "denominator": "1"}, ...]
//   polynomial: {"n": 3, "coefficients": [{"power": 1, "value": "7"}, ...]}
//
// Polynomials list nonzero coefficients only, in increasing power.

std::string table_to_json(const DerivCoefficientTable& table, int indent = -1);

/// Throws std::invalid_argument on malformed input, on rows out of order, or
/// on values that do not satisfy the coefficient recurrence.
DerivCoefficientTable table_from_json(std::string_view text);

std::string polynomial_to_json(std::size_t n, const IntPolynomial& p, int indent = -1);

/// Returns the order n and the polynomial. Throws std::invalid_argument on
/// malformed input.
std::pair<std::size_t, IntPolynomial> polynomial_from_json(std::string_view text);

}  // namespace inverf
