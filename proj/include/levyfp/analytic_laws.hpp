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

#include <cstddef>
#include <span>

#include "levyfp/path_engine.hpp"
#include "levyfp/special_functions.hpp"
#include "levyfp/stable_params.hpp"
#include "levyfp/stats.hpp"

namespace levyfp {

// Law of the passage position X_{T_x} when alpha*rho < 1: x / Beta(ar, 1-ar).
// All four reject alpha*rho = 1 with a DomainError.

double overshoot_pdf(const StableParams& params, double x, double y);
double overshoot_cdf(const StableParams& params, double x, double y);
/// Density of K_x = X_{T_x} - x at y > 0.
double kx_pdf(const StableParams& params, double x, double y);
/// lim_{h->0} P(K_x <= h) / h^{1 - alpha*rho}.
double kx_small_h_constant(const StableParams& params, double x);

/// P(S_1 <= x) ~ k x^{alpha*rho} as x -> 0, with k* = k Gamma(1 - rho).
/// k is estimated; k_ci is its confidence interval.
struct AsymptoticConstants {
  double k = 0.0;
  double k_star = 0.0;
  Interval k_ci{};

  static AsymptoticConstants from_k(const StableParams& params, double k, Interval ci = {});
  /// Standard error of k read off k_ci as a 95% interval; 0 when no interval is set.
  double k_stderr() const;
};

/// k from (x, P(S_1 <= x)) points at small x, fitting log p = ar log x + log k
/// with the slope held at alpha*rho. The interval is intercept +- 1.96 stderr.
AsymptoticConstants estimate_k(const StableParams& params, std::span<const std::pair<double, double>> points);

struct LtEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
  double censored_fraction = 0.0;
  std::size_t contributing = 0;  // samples entering the numerator
  bool low_count = false;        // fewer than 100 contributing samples
};

/// E[exp(-lambda T_x - mu X_{T_x})] from passage samples at level x.
/// Censored paths enter as 0, which biases the mean down by at most
/// censored_fraction * exp(-lambda * horizon). Throws CensoringError when the
/// censored fraction exceeds `censor_cap`.
LtEstimate joint_lt_lhs(double lambda, double mu, double x, std::span<const PassageSample> samples,
                        double censor_cap = 0.01);

/// E[e^{-mu S} 1{S >= x}] / E[e^{-mu S}] over samples of S = S_{e_lambda}.
/// The numerator is the J(mu, lambda; x) term; the denominator estimates the
/// Wiener-Hopf factor psi^+_lambda(-mu).
LtEstimate joint_lt_rhs(double lambda, double mu, double x, std::span<const SupremumSample> samples,
                        double censor_cap = 0.01);

/// E[e^{-mu S_{e_lambda}}] with standard error.
Estimate wiener_hopf_factor(double mu, std::span<const SupremumSample> samples);

/// Density of S_{e_lambda} at x: (lambda alpha / x) E[T_x e^{-lambda T_x}],
/// computed from draws of T_1 through T_x = x^alpha T_1.
Estimate f_lambda_density(const StableParams& params, double lambda, double x,
                          std::span<const PassageSample> t1_samples, double censor_cap = 0.01);

/// Coefficient of lambda^rho in the small-lambda asymptotics (S = S_{e_lambda}):
/// 1: P(S <= x)                             ~ k* x^{ar}
/// 2: int_x^inf mu e^{-mu v} P(S <= v) dv   ~ k* Gamma_upper(1+ar, mu x) mu^{-ar}
/// 3: E[e^{-mu S}]                          ~ k* Gamma(1+ar) mu^{-ar}
/// 4: E[e^{-mu S} 1{S >= x}]                ~ k* ar Gamma_upper(ar, mu x) mu^{-ar}
double asymptotic_small_lambda(const StableParams& params, const AsymptoticConstants& constants, double x,
                               double mu, int which);

struct LimitLawEstimate {
  double value = 0.0;      // corrected, clipped to [0, 1]
  double corrected = 0.0;  // corrected, unclipped
  double raw = 0.0;        // naive average over every sample
  double stderr_ = 0.0;    // of the corrected value
  double local_density = 0.0;
  bool heavy_tail_warning = false;
};

struct LimitLawOptions {
  double eps_factor = 1e-4;       // exclusion window t - T < eps_factor * t
  double density_window = 1e-2;   // half-width (relative to t) for the local density of T_x
  double warn_mass = 1e-3;        // near-singular mass that triggers the warning when rho <= 1/2
};

/// P(T^0_x <= t) = sin(pi rho) / (k pi rho) x^{-ar} E[T_x 1{T_x <= t} (t - T_x)^{rho - 1}].
/// Samples within eps of t are excluded and replaced by t f_T(t) eps^rho / rho,
/// with f_T estimated from the samples themselves.
LimitLawEstimate limit_law_cdf(const StableParams& params, const AsymptoticConstants& constants, double x,
                               double t, std::span<const double> tx_samples, const LimitLawOptions& opts = {});

/// lim_{h->0} P_lambda^{(x)}(K_x <= h) / h^{1-ar}, the tilted small-overshoot constant
///   sin(pi ar) / (k* pi ar (1-ar)) * lambda^{-rho} f_lambda(x) / P(S_{e_lambda} >= x),
/// where P(S_{e_lambda} >= x) = E[e^{-lambda T_x}]. The ratio f_lambda / E[e^{-lambda T_x}]
/// comes from the same T_1 draws, so its stderr uses the ratio delta method.
Estimate tilted_small_h_limit(const StableParams& params, const AsymptoticConstants& constants, double x,
                              double lambda, std::span<const PassageSample> t1_samples, double censor_cap = 0.01);

/// P_lambda^{(x)}(K_x <= h) = E[e^{-lambda T_x} 1{K_x <= h}] / E[e^{-lambda T_x}] from
/// passages at level x. Censored passages carry weight 0.
Estimate tilted_overshoot_cdf(double lambda, double h, std::span<const PassageSample> passages);

/// limit_law_cdf on an increasing grid, replaced by its running maximum so the
/// result is a distribution function. Throws DomainError if ts is not sorted.
std::vector<double> limit_law_curve(const StableParams& params, const AsymptoticConstants& constants, double x,
                                    std::span<const double> ts, std::span<const double> tx_samples,
                                    const LimitLawOptions& opts = {});

/// lim_{h->0} E[e^{-lambda T_x} | K_x <= h] = (k* ar)^{-1} x^{1-ar} lambda^{-rho} f_lambda(x).
/// The stderr includes the uncertainty of k when constants.k_ci is set.
Estimate conditional_lt_limit(const StableParams& params, const AsymptoticConstants& constants, double x,
                              double lambda, std::span<const PassageSample> t1_samples,
                              double censor_cap = 0.01);

}  // namespace levyfp
