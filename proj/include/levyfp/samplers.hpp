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

#include <span>

#include "levyfp/rng.hpp"
#include "levyfp/stable_params.hpp"

namespace levyfp {

/// One draw of the increment X_dt, i.e. dt^{1/alpha} X_1 in law
/// (Chambers-Mallows-Stuck transform; one RNG block per draw).
double sample_stable_increment(const StableParams& params, double dt, RngStream& rng);

/// Fills `out` with i.i.d. increments X_dt. This is the vectorized hot path
/// behind every simulated skeleton; it consumes exactly one block per value.
/// Results agree in law, not bitwise, with sample_stable_increment.
void fill_stable_increments(const StableParams& params, double dt, RngStream& rng, std::span<double> out);

/// Exponential variable with rate gamma (mean 1/gamma).
double sample_exponential(double gamma, RngStream& rng);

double sample_standard_normal(RngStream& rng);

/// log of a Gamma(shape, 1) variate. Working in logs keeps ratios of
/// small-shape variates representable.
double sample_log_gamma(double shape, RngStream& rng);

/// Beta(a, b) variate in the open interval (0, 1).
double sample_beta(double a, double b, RngStream& rng);

/// Exact overshoot K_x = X_{T_x} - x for alpha*rho < 1, drawn as
/// x * (1/Beta(alpha*rho, 1 - alpha*rho) - 1). Always positive.
double sample_overshoot_excess(const StableParams& params, double x, RngStream& rng);

/// Exact passage position X_{T_x} = x / Beta(alpha*rho, 1 - alpha*rho).
/// Strictly greater than x, including after rounding.
double sample_overshoot_exact(const StableParams& params, double x, RngStream& rng);

/// Throws DomainError unless alpha*rho < 1; `what` names the caller.
void require_jumping_crossings(const StableParams& params, const char* what);

}  // namespace levyfp
