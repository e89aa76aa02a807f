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
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "levyfp/rng.hpp"

namespace levyfp {

/// A Monte Carlo estimate and its standard error.
struct Estimate {
  double value = 0.0;
  double stderr_ = 0.0;
};

/// Sorted sample set, optionally carrying normalized positive weights (used
/// for exponentially tilted measures). +infinity is a legal sample value and
/// stands for "beyond the simulation horizon".
class EmpiricalDistribution {
 public:
  EmpiricalDistribution() = default;
  explicit EmpiricalDistribution(std::vector<double> samples);
  /// Weights need not be normalized; they are rescaled to sum to one.
  EmpiricalDistribution(std::vector<double> samples, std::vector<double> weights);

  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }
  bool weighted() const noexcept { return !weights_.empty(); }
  std::span<const double> samples() const noexcept { return samples_; }
  std::span<const double> weights() const noexcept { return weights_; }

  /// Total weight of samples <= y.
  double cdf(double y) const;

 private:
  std::vector<double> samples_;
  std::vector<double> weights_;
  std::vector<double> cumulative_;  // cumulative_[i] = weight of samples_[0..i]
};

/// Right-continuous (weighted) empirical CDF at y. Throws on empty input.
double ecdf(const EmpiricalDistribution& dist, double y);

/// sup_y |F_n(y) - F(y)|, evaluating both one-sided gaps at every distinct
/// sample value. Unweighted distributions only.
double ks_one_sample(const EmpiricalDistribution& dist, const std::function<double(double)>& cdf);

struct KsTwoSample {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// Two-sample Kolmogorov-Smirnov statistic with the asymptotic p-value
/// (Stephens' small-sample correction). Both inputs unweighted, n >= 50.
KsTwoSample ks_two_sample(const EmpiricalDistribution& a, const EmpiricalDistribution& b);

/// Q_KS(t) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 t^2).
double kolmogorov_survival(double t);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
  double r_squared = 1.0;
  std::size_t dropped = 0;  // points with p <= 0 that were skipped
};

/// Least squares of log p on log x. Points with p <= 0 are dropped (and
/// counted); fewer than three usable points is an error.
FitResult loglog_fit(std::span<const std::pair<double, double>> points);

/// Intercept of log p = slope * log x + c for a known slope, with its
/// standard error from the residual scatter.
Estimate loglog_intercept_fixed_slope(std::span<const std::pair<double, double>> points, double slope);

/// Largest multiplicity / N over exactly tied sample values.
double max_cdf_jump(const EmpiricalDistribution& dist);

struct MeanCI {
  double mean = 0.0;
  double stderr_ = 0.0;
  double halfwidth95 = 0.0;
};

/// Mean with standard error. With weights, the self-normalized weighted mean
/// and its delta-method standard error sqrt(sum w_i^2 (v_i - m)^2).
MeanCI mean_ci(std::span<const double> values, std::optional<std::span<const double>> weights = std::nullopt);

/// mean(num) / mean(den) with a delta-method standard error.
Estimate ratio_of_means(std::span<const double> num, std::span<const double> den);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Percentile bootstrap interval of `statistic` over resamples of `values`.
Interval bootstrap_ci(std::span<const double> values,
                      const std::function<double(std::span<const double>)>& statistic, RngStream rng,
                      int resamples = 200, double level = 0.95);

}  // namespace levyfp
