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

#include "levyfp/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "levyfp/errors.hpp"

namespace levyfp {

void require_jumping_crossings(const StableParams& params, const char* what) {
  if (!(params.alpha_rho() < 1.0)) {
    throw DomainError(std::string(what) +
                      " requires alpha*rho < 1 (the Beta-ratio overshoot law excludes the "
                      "spectrally negative case, where the process creeps over the level)");
  }
}

double sample_exponential(double gamma, RngStream& rng) {
  if (!(gamma > 0.0)) throw DomainError("exponential rate must be positive");
  return -std::log(rng.uniform()) / gamma;
}

double sample_standard_normal(RngStream& rng) {
  const double r = std::sqrt(-2.0 * std::log(rng.uniform()));
  return r * std::cos(2.0 * std::numbers::pi * rng.uniform());
}

double sample_log_gamma(double shape, RngStream& rng) {
  if (!(shape > 0.0)) throw DomainError("gamma shape must be positive");
  if (shape < 1.0) {
    // G(a) = G(a + 1) * U^{1/a}
    return sample_log_gamma(shape + 1.0, rng) + std::log(rng.uniform()) / shape;
  }
  // Marsaglia & Tsang (2000).
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double z = sample_standard_normal(rng);
    const double v = 1.0 + c * z;
    if (v <= 0.0) continue;
    const double v3 = v * v * v;
    const double log_u = std::log(rng.uniform());
    if (log_u < 0.5 * z * z + d - d * v3 + d * std::log(v3)) return std::log(d) + std::log(v3);
  }
}

double sample_beta(double a, double b, RngStream& rng) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("beta shape parameters must be positive");
  const double la = sample_log_gamma(a, rng);
  const double lb = sample_log_gamma(b, rng);
  const double beta = 1.0 / (1.0 + std::exp(lb - la));
  return std::clamp(beta, std::numeric_limits<double>::min(), std::nextafter(1.0, 0.0));
}

double sample_overshoot_excess(const StableParams& params, double x, RngStream& rng) {
  require_jumping_crossings(params, "exact overshoot sampling");
  if (!(x > 0.0)) throw DomainError("passage level x must be positive");
  const double a = params.alpha_rho();
  const double la = sample_log_gamma(a, rng);
  const double lb = sample_log_gamma(1.0 - a, rng);
  // 1/B - 1 = G_b / G_a
  return std::fmax(x * std::exp(lb - la), std::numeric_limits<double>::denorm_min());
}

double sample_overshoot_exact(const StableParams& params, double x, RngStream& rng) {
  const double k = sample_overshoot_excess(params, x, rng);
  return std::fmax(x + k, std::nextafter(x, std::numeric_limits<double>::infinity()));
}

}  // namespace levyfp
