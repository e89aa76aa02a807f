// Copyright 2026 The levyfp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace levyfp {

enum class Spectral { kTwoSided, kPositive, kNegative };

/// Law of a strictly alpha-stable process with 1 < alpha <= 2.
///
/// The process is parameterized by its index `alpha` and positivity parameter
/// `rho = P(X_1 >= 0)`. The classical skewness `beta` is derived from
/// `(alpha, rho)` through
///
///     rho = 1/2 + arctan(beta * tan(pi*alpha/2)) / (pi*alpha)
///
/// and `X_1` has characteristic function
///
///     E exp(i t X_1) = exp(-scale^alpha |t|^alpha (1 - i beta sign(t) tan(pi alpha / 2)))
///
/// With the default unit scale the Gaussian case alpha = 2 has Var X_1 = 2.
/// All constants estimated by this library (k, k*) refer to this convention.
struct StableParams {
  double alpha = 2.0;
  double rho = 0.5;
  double skewness = 0.0;
  double scale = 1.0;
  Spectral spectral = Spectral::kTwoSided;

  /// alpha*rho, exactly 1 in the spectrally negative case.
  double alpha_rho() const noexcept;
  bool creeps_upward() const noexcept { return spectral == Spectral::kNegative; }
};

/// Validates (alpha, rho) and derives the skewness. `rho` within 1e-12 of an
/// end of [1 - 1/alpha, 1/alpha] is snapped to that end and marked spectral.
StableParams make_params(double alpha, double rho, double scale = 1.0);

double skewness_from_rho(double alpha, double rho);
double rho_from_skewness(double alpha, double skewness);

}  // namespace levyfp
