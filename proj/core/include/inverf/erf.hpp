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

namespace inverf {

// Error function family evaluated with W. J. Cody's rational Chebyshev
// approximations (SPECFUN CALERF). Results do not depend on the platform libm
// beyond exp(). Relative accuracy is close to binary64 rounding on the whole
// real line.
namespace erf {

double erf(double x);
double erfc(double x);

/// exp(x^2) * erfc(x). Finite for x >= -26.6; decays like 1/(x sqrt(pi)).
double erfcx(double x);

}  // namespace erf

/// Swappable erf backend for the asymptotic formulas.
struct ErfProvider {
  double (*erf)(double);
  double (*erfc)(double);
  double (*erfcx)(double);

  /// The self-contained Cody implementation above.
  static const ErfProvider& standard();
};

}  // namespace inverf
