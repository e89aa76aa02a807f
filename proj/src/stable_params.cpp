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

#include "levyfp/stable_params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "levyfp/errors.hpp"

namespace levyfp {

namespace {
constexpr double kBoundarySnap = 1e-12;
}

double StableParams::alpha_rho() const noexcept {
  if (spectral == Spectral::kNegative) return 1.0;
  return alpha * rho;
}

double skewness_from_rho(double alpha, double rho) {
  if (alpha == 2.0) return 0.0;
  const double pi = std::numbers::pi;
  const double beta = std::tan(pi * alpha * (rho - 0.5)) / std::tan(pi * alpha / 2.0);
  return std::clamp(beta, -1.0, 1.0);
}

double rho_from_skewness(double alpha, double skewness) {
  const double pi = std::numbers::pi;
  return 0.5 + std::atan(skewness * std::tan(pi * alpha / 2.0)) / (pi * alpha);
}

StableParams make_params(double alpha, double rho, double scale) {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    std::ostringstream msg;
    msg << "stable index alpha must lie in (1, 2]; got " << alpha;
    throw DomainError(msg.str());
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw DomainError("stable scale must be positive and finite");
  }
  const double lo = 1.0 - 1.0 / alpha;
  const double hi = 1.0 / alpha;
  if (!(rho >= lo - kBoundarySnap && rho <= hi + kBoundarySnap)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "positivity parameter rho must lie in [1 - 1/alpha, 1/alpha] = [" << lo << ", " << hi
        << "] for alpha = " << alpha << "; got " << rho;
    throw DomainError(msg.str());
  }

  StableParams p;
  p.alpha = alpha;
  p.scale = scale;
  if (alpha == 2.0) {
    // Brownian motion: continuous paths, crossing by creeping.
    p.rho = 0.5;
    p.skewness = 0.0;
    p.spectral = Spectral::kNegative;
    return p;
  }
  if (std::abs(rho - hi) <= kBoundarySnap) {
    p.rho = hi;
    p.skewness = -1.0;
    p.spectral = Spectral::kNegative;
  } else if (std::abs(rho - lo) <= kBoundarySnap) {
    p.rho = lo;
    p.skewness = 1.0;
    p.spectral = Spectral::kPositive;
  } else {
    p.rho = rho;
    p.skewness = skewness_from_rho(alpha, rho);
  }
  return p;
}

}  // namespace levyfp
