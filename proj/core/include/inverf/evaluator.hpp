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
#include <optional>
#include <string_view>
#include <vector>

#include "inverf/coeffs.hpp"

namespace inverf {

/// How the asymptotic tail weights its terms.
enum class TailForm {
  /// sum_k x^(2k+1) / ((2k+1) sqrt(ln(2k+1))), one weight per term.
  per_term,
  /// sum_k x^(2k+1) / ((2N+1) sqrt(ln(2N+1))), the weight of the last index
  /// applied to every term. Kept for comparison only; it needs an explicit N.
  printed,
};

/// Route requested from inverf().
enum class Method { automatic, taylor, lambert, newton };

/// Route actually used to produce the unpolished value.
enum class EvalMethod { taylor_tail, lambert, newton_polished };

std::string_view to_string(EvalMethod method);
std::optional<Method> parse_method(std::string_view text);

struct EvalConfig {
  std::size_t order = 9;                 // odd degree M of the exact Taylor head
  std::optional<std::size_t> tail_end;   // N; nullopt sums until the terms are negligible
  double switch_point = 0.95;            // |x| above this uses the Lambert-W seed
  bool polish = true;                    // Newton-refine the seed
  Method method = Method::automatic;
  TailForm tail_form = TailForm::per_term;

  /// Throws std::invalid_argument when order is even or zero, when N < (M+1)/2,
  /// or when switch_point is outside (0, 1).
  void validate() const;
};

struct EvalReport {
  double x = 0.0;
  double value = 0.0;
  EvalMethod method = EvalMethod::taylor_tail;
  std::size_t terms_used = 0;        // head + tail terms, or Newton steps for the newton route
  std::size_t polish_iterations = 0;
  double residual = 0.0;             // |erf(value) - x|
};

inline constexpr std::size_t kAutoTailMaxTerms = 1'000'000;
inline constexpr double kAutoTailRelativeCutoff = 1e-17;
inline constexpr std::size_t kIntDiffOrder = 201;

/// T_M(x) = sum over odd n <= M of (d_n / n!) x^n, evaluated by Horner in x^2.
/// Throws std::out_of_range if M exceeds the table and std::domain_error for
/// |x| >= 1.
double taylor_head(double x, std::size_t order, const DerivCoefficientTable& table);

struct TailSum {
  double value = 0.0;
  std::size_t terms = 0;
};

/// Asymptotic tail from k = (M+1)/2 to N. With N unset (per_term form only),
/// stops once the next term drops below 1e-17 of the running sum or after
/// 10^6 terms.
TailSum tail_sum(double x, std::size_t order, std::optional<std::size_t> tail_end,
                 TailForm form = TailForm::per_term);

/// Newton iteration y <- y + (x - erf(y)) (sqrt(pi)/2) exp(y^2) until
/// |erf(y) - x| <= tol. Throws std::domain_error for |x| >= 1 or a non-finite
/// seed and std::runtime_error after 100 iterations without convergence.
double newton_oracle(double x, double seed, double tol);

/// inverf on (-1, 1): exact Taylor head plus asymptotic tail for
/// |x| <= switch_point, Lambert-W boundary seed beyond, optional Newton polish.
/// Odd by construction: the value is computed for |x| and then signed.
class Evaluator {
 public:
  explicit Evaluator(DerivCoefficientTable table);

  const DerivCoefficientTable& table() const { return table_; }

  double taylor_head(double x, std::size_t order) const;

  /// Throws std::domain_error for |x| >= 1 or NaN.
  EvalReport inverf(double x, const EvalConfig& config = {}) const;

 private:
  DerivCoefficientTable table_;
  std::vector<double> taylor_;  // d_n / n! in binary64
};

/// Convenience wrapper building an Evaluator around `table`.
EvalReport inverf(double x, const EvalConfig& config, const DerivCoefficientTable& table);

/// Centered-difference residual of J'' - 2 J (J')^2 at z = x, with J the
/// polished evaluator. Throws std::invalid_argument for h <= 0 and
/// std::domain_error when x +- h leaves (-1 + 1e-6, 1 - 1e-6).
double ode_residual(const Evaluator& evaluator, double x, double h);

/// Defect J'(z) * int_0^z J + 1/2 - J'(z)/sqrt(pi) of the truncated Taylor
/// series of order `order` (termwise differentiated and integrated).
/// Throws std::domain_error for |x| > 0.9 and std::out_of_range when the
/// table is shorter than `order`.
double intdiff_check(const DerivCoefficientTable& table, double x,
                     std::size_t order = kIntDiffOrder);

}  // namespace inverf
