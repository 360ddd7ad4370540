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

#include "inverf/evaluator.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "inverf/asym.hpp"
#include "inverf/erf.hpp"

namespace inverf {

namespace {

constexpr double kHalfSqrtPi = 0.88622692545275801365;
constexpr int kNewtonMaxIterations = 100;
constexpr double kOdeMargin = 1e-6;

void require_open_unit(double x, const char* what) {
  if (!(std::fabs(x) < 1.0)) {
    throw std::domain_error(std::string(what) + ": |x| must be < 1, got " + std::to_string(x));
  }
}

// x - erf(y), using erfc where erf(y) is close to 1 so that 1 - x stays exact.
double erf_gap(double x, double y) {
  if (x >= 0.5 && y > 0.0) return erf::erfc(y) - (1.0 - x);
  if (x <= -0.5 && y < 0.0) return (1.0 + x) - erf::erfc(-y);
  return x - erf::erf(y);
}

double newton_step(double x, double y) {
  return erf_gap(x, y) * kHalfSqrtPi * std::exp(y * y);
}

struct Polished {
  double value;
  std::size_t iterations;
};

// Newton from `seed` until the step no longer moves y.
Polished polish(double x, double seed) {
  double y = seed;
  std::size_t it = 0;
  for (; it < kNewtonMaxIterations; ++it) {
    const double step = newton_step(x, y);
    if (!std::isfinite(step)) break;
    y += step;
    if (std::fabs(step) <= std::numeric_limits<double>::epsilon() * std::fabs(y)) {
      ++it;
      break;
    }
  }
  return {y, it};
}

double tail_weight(std::size_t k) {
  const double m = static_cast<double>(2 * k + 1);
  return 1.0 / (m * std::sqrt(std::log(m)));
}

}  // namespace

std::string_view to_string(EvalMethod method) {
  switch (method) {
    case EvalMethod::taylor_tail: return "taylor_tail";
    case EvalMethod::lambert: return "lambert";
    case EvalMethod::newton_polished: return "newton_polished";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view text) {
  if (text == "auto") return Method::automatic;
  if (text == "taylor") return Method::taylor;
  if (text == "lambert") return Method::lambert;
  if (text == "newton") return Method::newton;
  return std::nullopt;
}

void EvalConfig::validate() const {
  if (order == 0 || order % 2 == 0) {
    throw std::invalid_argument("Taylor order must be odd and >= 1, got " + std::to_string(order));
  }
  if (tail_end && *tail_end < (order + 1) / 2) {
    throw std::invalid_argument("tail end N=" + std::to_string(*tail_end) +
                                " is below (M+1)/2=" + std::to_string((order + 1) / 2));
  }
  if (!(switch_point > 0.0 && switch_point < 1.0)) {
    throw std::invalid_argument("switch point must lie in (0, 1)");
  }
}

double taylor_head(double x, std::size_t order, const DerivCoefficientTable& table) {
  require_open_unit(x, "taylor_head");
  if (order > table.max_n()) {
    throw std::out_of_range("Taylor order " + std::to_string(order) + " exceeds table size " +
                            std::to_string(table.max_n()));
  }
  const std::size_t top = order % 2 == 1 ? order : order - 1;
  const double x2 = x * x;
  double acc = 0.0;
  for (std::size_t n = top + 2; n >= 3;) {
    n -= 2;
    acc = acc * x2 + taylor_coefficient(table, n);
  }
  return acc * x;
}

TailSum tail_sum(double x, std::size_t order, std::optional<std::size_t> tail_end,
                 TailForm form) {
  require_open_unit(x, "tail_sum");
  const std::size_t first = (order + 1) / 2;
  if (tail_end && *tail_end < first) {
    throw std::invalid_argument("tail end below (M+1)/2");
  }
  if (form == TailForm::printed && !tail_end) {
    throw std::invalid_argument("the printed tail form needs an explicit N");
  }

  const double ax = std::fabs(x);
  const double x2 = ax * ax;
  double power = std::pow(ax, static_cast<double>(2 * first + 1));
  TailSum out;
  if (ax == 0.0) return out;

  if (form == TailForm::printed) {
    for (std::size_t k = first; k <= *tail_end; ++k, power *= x2) {
      out.value += power;
      ++out.terms;
    }
    out.value *= tail_weight(*tail_end);
  } else if (tail_end) {
    for (std::size_t k = first; k <= *tail_end; ++k, power *= x2) {
      out.value += power * tail_weight(k);
      ++out.terms;
    }
  } else {
    for (std::size_t k = first; out.terms < kAutoTailMaxTerms; ++k, power *= x2) {
      const double term = power * tail_weight(k);
      if (out.terms > 0 && term < kAutoTailRelativeCutoff * out.value) break;
      out.value += term;
      ++out.terms;
    }
  }
  if (x < 0.0) out.value = -out.value;
  return out;
}

double newton_oracle(double x, double seed, double tol) {
  require_open_unit(x, "newton_oracle");
  if (!std::isfinite(seed)) throw std::domain_error("newton_oracle: seed must be finite");
  double y = seed;
  for (int it = 0; it < kNewtonMaxIterations; ++it) {
    if (std::fabs(erf_gap(x, y)) <= tol) return y;
    y += newton_step(x, y);
    if (!std::isfinite(y)) break;
  }
  if (std::isfinite(y) && std::fabs(erf_gap(x, y)) <= tol) return y;
  throw std::runtime_error("newton_oracle did not converge for x=" + std::to_string(x));
}

Evaluator::Evaluator(DerivCoefficientTable table) : table_(std::move(table)) {
  taylor_.resize(table_.max_n() + 1);
  for (std::size_t n = 0; n <= table_.max_n(); ++n) taylor_[n] = taylor_coefficient(table_, n);
}

double Evaluator::taylor_head(double x, std::size_t order) const {
  require_open_unit(x, "taylor_head");
  if (order > table_.max_n()) {
    throw std::out_of_range("Taylor order " + std::to_string(order) + " exceeds table size " +
                            std::to_string(table_.max_n()));
  }
  const std::size_t top = order % 2 == 1 ? order : order - 1;
  const double x2 = x * x;
  double acc = 0.0;
  for (std::size_t n = top + 2; n >= 3;) {
    n -= 2;
    acc = acc * x2 + taylor_[n];
  }
  return acc * x;
}

EvalReport Evaluator::inverf(double x, const EvalConfig& config) const {
  require_open_unit(x, "inverf");
  config.validate();

  const double ax = std::fabs(x);
  EvalReport report;
  report.x = x;

  Method route = config.method;
  if (route == Method::automatic) {
    route = ax <= config.switch_point ? Method::taylor : Method::lambert;
  }

  double y = 0.0;
  switch (route) {
    case Method::taylor: {
      const TailSum tail = tail_sum(ax, config.order, config.tail_end, config.tail_form);
      y = taylor_head(ax, config.order) + tail.value;
      report.method = EvalMethod::taylor_tail;
      report.terms_used = (config.order + 1) / 2 + tail.terms;
      break;
    }
    case Method::lambert:
      y = ax > 0.0 ? inverf_boundary(ax) : 0.0;
      report.method = EvalMethod::lambert;
      report.terms_used = 0;
      break;
    case Method::newton:
    case Method::automatic: {
      const Polished p = polish(ax, 0.0);
      y = p.value;
      report.method = EvalMethod::newton_polished;
      report.terms_used = p.iterations;
      break;
    }
  }

  if (config.polish && route != Method::newton && ax > 0.0) {
    const Polished p = polish(ax, y);
    y = p.value;
    report.polish_iterations = p.iterations;
  }

  report.value = x < 0.0 ? -y : y;
  report.residual = std::fabs(erf_gap(ax, y));
  return report;
}

EvalReport inverf(double x, const EvalConfig& config, const DerivCoefficientTable& table) {
  return Evaluator(table).inverf(x, config);
}

double ode_residual(const Evaluator& evaluator, double x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("ode_residual needs h > 0");
  if (!(std::fabs(x) + h < 1.0 - kOdeMargin)) {
    throw std::domain_error("ode_residual: x +- h leaves the evaluator's domain");
  }
  const double lo = evaluator.inverf(x - h).value;
  const double mid = evaluator.inverf(x).value;
  const double hi = evaluator.inverf(x + h).value;
  const double d1 = (hi - lo) / (2.0 * h);
  const double d2 = (hi - 2.0 * mid + lo) / (h * h);
  return d2 - 2.0 * mid * d1 * d1;
}

double intdiff_check(const DerivCoefficientTable& table, double x, std::size_t order) {
  if (!(std::fabs(x) <= 0.9)) throw std::domain_error("intdiff_check needs |x| <= 0.9");
  if (order > table.max_n()) {
    throw std::out_of_range("intdiff order " + std::to_string(order) + " exceeds table size " +
                            std::to_string(table.max_n()));
  }
  double derivative = 0.0;
  double integral = 0.0;
  for (std::size_t n = 1; n <= order; n += 2) {
    const double a = taylor_coefficient(table, n);
    derivative += static_cast<double>(n) * a * std::pow(x, static_cast<double>(n - 1));
    integral += a * std::pow(x, static_cast<double>(n + 1)) / static_cast<double>(n + 1);
  }
  return derivative * integral + 0.5 - derivative / std::sqrt(std::numbers::pi);
}

}  // namespace inverf
