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

#include "levyfp/analytic_laws.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "levyfp/errors.hpp"
#include "levyfp/samplers.hpp"

namespace levyfp {

namespace {

constexpr double kPi = std::numbers::pi;

double checked_ar(const StableParams& params, const char* what) {
  require_jumping_crossings(params, what);
  return params.alpha_rho();
}

void require_positive_level(double x, const char* what) {
  if (!(x > 0.0)) throw DomainError(std::string(what) + ": level x must be positive");
}

double censored_share(std::span<const PassageSample> samples) {
  if (samples.empty()) throw DomainError("estimator needs at least one sample");
  std::size_t c = 0;
  for (const auto& s : samples) c += s.censored ? 1 : 0;
  return static_cast<double>(c) / static_cast<double>(samples.size());
}

void enforce_cap(double frac, double cap, const char* what) {
  if (frac > cap) {
    throw CensoringError(std::string(what) + ": censored fraction " + std::to_string(frac) + " exceeds cap " +
                         std::to_string(cap) + "; raise the horizon");
  }
}

}  // namespace

double overshoot_pdf(const StableParams& params, double x, double y) {
  const double ar = checked_ar(params, "overshoot_pdf");
  require_positive_level(x, "overshoot_pdf");
  if (y <= x) return 0.0;
  return std::sin(kPi * ar) / kPi / y * std::pow(x / (y - x), ar);
}

double overshoot_cdf(const StableParams& params, double x, double y) {
  const double ar = checked_ar(params, "overshoot_cdf");
  require_positive_level(x, "overshoot_cdf");
  if (y <= x) return 0.0;
  if (std::isinf(y)) return 1.0;
  // 1 - I_{x/y}(ar, 1-ar) = I_{(y-x)/y}(1-ar, ar), without cancellation near y = x.
  return reg_inc_beta(1.0 - ar, ar, (y - x) / y);
}

double kx_pdf(const StableParams& params, double x, double y) {
  const double ar = checked_ar(params, "kx_pdf");
  require_positive_level(x, "kx_pdf");
  if (y <= 0.0) return 0.0;
  // Same density as overshoot_pdf(x, x + y), without rounding y into x + y.
  return std::sin(kPi * ar) / kPi / (x + y) * std::pow(x / y, ar);
}

double kx_small_h_constant(const StableParams& params, double x) {
  const double ar = checked_ar(params, "kx_small_h_constant");
  require_positive_level(x, "kx_small_h_constant");
  return std::sin(kPi * ar) / (kPi * (1.0 - ar)) * std::pow(x, ar - 1.0);
}

AsymptoticConstants AsymptoticConstants::from_k(const StableParams& params, double k, Interval ci) {
  if (!(k > 0.0)) throw DomainError("AsymptoticConstants: k must be positive");
  AsymptoticConstants c;
  c.k = k;
  c.k_star = k * gamma_fn(1.0 - params.rho);
  c.k_ci = ci;
  return c;
}

double AsymptoticConstants::k_stderr() const {
  return k_ci.hi > k_ci.lo ? 0.5 * (k_ci.hi - k_ci.lo) / 1.959963984540054 : 0.0;
}

AsymptoticConstants estimate_k(const StableParams& params, std::span<const std::pair<double, double>> points) {
  const Estimate c = loglog_intercept_fixed_slope(points, params.alpha_rho());
  const double hw = 1.959963984540054 * c.stderr_;
  return AsymptoticConstants::from_k(params, std::exp(c.value), {std::exp(c.value - hw), std::exp(c.value + hw)});
}

LtEstimate joint_lt_lhs(double lambda, double mu, double x, std::span<const PassageSample> samples,
                        double censor_cap) {
  if (lambda < 0.0 || mu < 0.0) throw DomainError("joint_lt_lhs: lambda and mu must be nonnegative");
  (void)x;
  LtEstimate r;
  r.censored_fraction = censored_share(samples);
  enforce_cap(r.censored_fraction, censor_cap, "joint_lt_lhs");
  std::vector<double> v;
  v.reserve(samples.size());
  for (const auto& s : samples) {
    if (s.censored) {
      v.push_back(0.0);
    } else {
      v.push_back(std::exp(-lambda * s.t_x - mu * s.position));
      ++r.contributing;
    }
  }
  const MeanCI m = mean_ci(v);
  r.value = m.mean;
  r.stderr_ = m.stderr_;
  r.low_count = r.contributing < 100;
  return r;
}

LtEstimate joint_lt_rhs(double lambda, double mu, double x, std::span<const SupremumSample> samples,
                        double censor_cap) {
  if (lambda <= 0.0 || mu < 0.0) throw DomainError("joint_lt_rhs: need lambda > 0 and mu >= 0");
  if (samples.empty()) throw DomainError("joint_lt_rhs: no samples");
  LtEstimate r;
  std::size_t truncated = 0;
  std::vector<double> num, den;
  num.reserve(samples.size());
  den.reserve(samples.size());
  for (const auto& s : samples) {
    truncated += s.truncated ? 1 : 0;
    const double e = std::exp(-mu * s.value);
    den.push_back(e);
    if (s.value >= x) {
      num.push_back(e);
      ++r.contributing;
    } else {
      num.push_back(0.0);
    }
  }
  r.censored_fraction = static_cast<double>(truncated) / static_cast<double>(samples.size());
  enforce_cap(r.censored_fraction, censor_cap, "joint_lt_rhs");
  const Estimate q = ratio_of_means(num, den);
  r.value = q.value;
  r.stderr_ = q.stderr_;
  r.low_count = r.contributing < 100;
  return r;
}

Estimate wiener_hopf_factor(double mu, std::span<const SupremumSample> samples) {
  if (samples.empty()) throw DomainError("wiener_hopf_factor: no samples");
  std::vector<double> v;
  v.reserve(samples.size());
  for (const auto& s : samples) v.push_back(std::exp(-mu * s.value));
  const MeanCI m = mean_ci(v);
  return {m.mean, m.stderr_};
}

Estimate f_lambda_density(const StableParams& params, double lambda, double x,
                          std::span<const PassageSample> t1_samples, double censor_cap) {
  if (!(lambda > 0.0)) throw DomainError("f_lambda_density: lambda must be positive");
  require_positive_level(x, "f_lambda_density");
  enforce_cap(censored_share(t1_samples), censor_cap, "f_lambda_density");
  const double xa = std::pow(x, params.alpha);
  std::vector<double> v;
  v.reserve(t1_samples.size());
  for (const auto& s : t1_samples) {
    if (s.censored) {
      v.push_back(0.0);
      continue;
    }
    const double t = xa * s.t_x;
    v.push_back(t * std::exp(-lambda * t));
  }
  const MeanCI m = mean_ci(v);
  const double c = lambda * params.alpha / x;
  return {c * m.mean, c * m.stderr_};
}

Estimate tilted_small_h_limit(const StableParams& params, const AsymptoticConstants& constants, double x,
                              double lambda, std::span<const PassageSample> t1_samples, double censor_cap) {
  const double ar = checked_ar(params, "tilted_small_h_limit");
  if (!(lambda > 0.0)) throw DomainError("tilted_small_h_limit: lambda must be positive");
  require_positive_level(x, "tilted_small_h_limit");
  if (!(constants.k_star > 0.0)) throw DomainError("tilted_small_h_limit: k* must be positive");
  enforce_cap(censored_share(t1_samples), censor_cap, "tilted_small_h_limit");
  const double xa = std::pow(x, params.alpha);
  std::vector<double> num, den;
  num.reserve(t1_samples.size());
  den.reserve(t1_samples.size());
  for (const auto& s : t1_samples) {
    const double t = xa * s.t_x;
    const double e = s.censored ? 0.0 : std::exp(-lambda * t);
    num.push_back(e * (s.censored ? 0.0 : t));
    den.push_back(e);
  }
  const Estimate r = ratio_of_means(num, den);
  const double c = std::sin(kPi * ar) / (constants.k_star * kPi * ar * (1.0 - ar)) * std::pow(lambda, -params.rho) *
                   lambda * params.alpha / x;
  const double rel_k = constants.k_stderr() / constants.k;
  return {c * r.value, std::hypot(c * r.stderr_, c * r.value * rel_k)};
}

Estimate tilted_overshoot_cdf(double lambda, double h, std::span<const PassageSample> passages) {
  if (!(lambda > 0.0)) throw DomainError("tilted_overshoot_cdf: lambda must be positive");
  if (!(h >= 0.0)) throw DomainError("tilted_overshoot_cdf: h must be nonnegative");
  if (passages.empty()) throw DomainError("tilted_overshoot_cdf: no samples");
  std::vector<double> num, den;
  num.reserve(passages.size());
  den.reserve(passages.size());
  for (const auto& s : passages) {
    const double e = s.censored ? 0.0 : std::exp(-lambda * s.t_x);
    num.push_back(s.overshoot <= h ? e : 0.0);
    den.push_back(e);
  }
  return ratio_of_means(num, den);
}

double asymptotic_small_lambda(const StableParams& params, const AsymptoticConstants& constants, double x,
                               double mu, int which) {
  const double ar = checked_ar(params, "asymptotic_small_lambda");
  if (x < 0.0) throw DomainError("asymptotic_small_lambda: x must be nonnegative");
  if (which != 1 && !(mu > 0.0)) throw DomainError("asymptotic_small_lambda: mu must be positive");
  switch (which) {
    case 1:
      return constants.k_star * std::pow(x, ar);
    case 2:
      return constants.k_star * upper_inc_gamma(1.0 + ar, mu * x) * std::pow(mu, -ar);
    case 3:
      return constants.k_star * gamma_fn(1.0 + ar) * std::pow(mu, -ar);
    case 4:
      return constants.k_star * ar * upper_inc_gamma(ar, mu * x) * std::pow(mu, -ar);
    default:
      throw DomainError("asymptotic_small_lambda: selector must be 1, 2, 3 or 4");
  }
}

LimitLawEstimate limit_law_cdf(const StableParams& params, const AsymptoticConstants& constants, double x,
                               double t, std::span<const double> tx_samples, const LimitLawOptions& opts) {
  const double ar = params.alpha_rho();
  const double rho = params.rho;
  require_positive_level(x, "limit_law_cdf");
  if (tx_samples.empty()) throw DomainError("limit_law_cdf: no samples");
  if (!(constants.k > 0.0)) throw DomainError("limit_law_cdf: k must be positive");
  LimitLawEstimate r;
  if (!(t > 0.0)) return r;

  const double pref = std::sin(kPi * rho) / (constants.k * kPi * rho) * std::pow(x, -ar);
  const double eps = opts.eps_factor * t;
  const double w = opts.density_window * t;
  const double n = static_cast<double>(tx_samples.size());

  std::vector<double> kept;
  kept.reserve(tx_samples.size());
  double raw_sum = 0.0;
  std::size_t in_window = 0;
  std::size_t near = 0;
  for (double s : tx_samples) {
    if (std::abs(s - t) <= w) ++in_window;
    if (s > t) {
      kept.push_back(0.0);
      continue;
    }
    const double gap = t - s;
    if (gap > 0.0) raw_sum += s * std::pow(gap, rho - 1.0);
    if (gap < 100.0 * eps) ++near;
    kept.push_back(gap < eps ? 0.0 : s * std::pow(gap, rho - 1.0));
  }
  r.local_density = static_cast<double>(in_window) / (n * 2.0 * w);
  const double correction = t * r.local_density * std::pow(eps, rho) / rho;
  const MeanCI m = mean_ci(kept);
  r.raw = pref * raw_sum / n;
  r.corrected = pref * (m.mean + correction);
  const double rel_k = constants.k_stderr() / constants.k;
  r.stderr_ = std::hypot(pref * m.stderr_, r.corrected * rel_k);
  r.value = std::clamp(r.corrected, 0.0, 1.0);
  r.heavy_tail_warning = rho <= 0.5 && static_cast<double>(near) / n > opts.warn_mass;
  return r;
}

std::vector<double> limit_law_curve(const StableParams& params, const AsymptoticConstants& constants, double x,
                                    std::span<const double> ts, std::span<const double> tx_samples,
                                    const LimitLawOptions& opts) {
  if (!std::is_sorted(ts.begin(), ts.end())) throw DomainError("limit_law_curve: grid must be increasing");
  std::vector<double> out(ts.size());
  double run = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    run = std::max(run, limit_law_cdf(params, constants, x, ts[i], tx_samples, opts).value);
    out[i] = run;
  }
  return out;
}

Estimate conditional_lt_limit(const StableParams& params, const AsymptoticConstants& constants, double x,
                              double lambda, std::span<const PassageSample> t1_samples, double censor_cap) {
  const double ar = checked_ar(params, "conditional_lt_limit");
  const Estimate f = f_lambda_density(params, lambda, x, t1_samples, censor_cap);
  const double c = std::pow(x, 1.0 - ar) * std::pow(lambda, -params.rho) / (constants.k_star * ar);
  const double rel_k = constants.k_stderr() / constants.k;
  return {c * f.value, std::hypot(c * f.stderr_, c * f.value * rel_k)};
}

}  // namespace levyfp
