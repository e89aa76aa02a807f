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

#include "levyfp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "levyfp/errors.hpp"

namespace levyfp {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples) : samples_(std::move(samples)) {
  std::sort(samples_.begin(), samples_.end());
}

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples, std::vector<double> weights) {
  if (samples.size() != weights.size()) throw DomainError("EmpiricalDistribution: weights length mismatch");
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return samples[a] < samples[b]; });
  double total = 0.0;
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("EmpiricalDistribution: weights must be positive");
    total += w;
  }
  samples_.reserve(order.size());
  weights_.reserve(order.size());
  for (std::size_t i : order) {
    samples_.push_back(samples[i]);
    weights_.push_back(weights[i] / total);
  }
  cumulative_.resize(weights_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    acc += weights_[i];
    cumulative_[i] = acc;
  }
  if (!cumulative_.empty()) cumulative_.back() = 1.0;
}

double EmpiricalDistribution::cdf(double y) const {
  if (samples_.empty()) throw DomainError("ecdf of an empty distribution");
  const auto it = std::upper_bound(samples_.begin(), samples_.end(), y);
  const auto count = static_cast<std::size_t>(it - samples_.begin());
  if (count == 0) return 0.0;
  if (weights_.empty()) return static_cast<double>(count) / static_cast<double>(samples_.size());
  return cumulative_[count - 1];
}

double ecdf(const EmpiricalDistribution& dist, double y) { return dist.cdf(y); }

double ks_one_sample(const EmpiricalDistribution& dist, const std::function<double(double)>& cdf) {
  if (dist.weighted()) throw DomainError("ks_one_sample: weighted distributions are not supported");
  const auto s = dist.samples();
  const double n = static_cast<double>(s.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    const double f = std::isinf(s[i]) ? (s[i] > 0 ? 1.0 : 0.0) : cdf(s[i]);
    d = std::max({d, static_cast<double>(j) / n - f, f - static_cast<double>(i) / n});
    i = j;
  }
  return d;
}

double kolmogorov_survival(double t) {
  if (t <= 0.0) return 1.0;
  if (t < 0.2) return 1.0;  // series alternates badly; the value is 1 to double precision
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 200; ++j) {
    const double term = std::exp(-2.0 * j * j * t * t);
    sum += sign * term;
    if (term < 1e-18) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsTwoSample ks_two_sample(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
  if (a.weighted() || b.weighted()) throw DomainError("ks_two_sample: weighted distributions are not supported");
  if (a.size() < 50 || b.size() < 50) throw DomainError("ks_two_sample: both samples need at least 50 points");
  const auto x = a.samples();
  const auto y = b.samples();
  const double n = static_cast<double>(x.size());
  const double m = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
  }
  const double en = std::sqrt(n * m / (n + m));
  return {d, kolmogorov_survival((en + 0.12 + 0.11 / en) * d)};
}

namespace {

std::vector<std::pair<double, double>> log_points(std::span<const std::pair<double, double>> points,
                                                  std::size_t& dropped) {
  std::vector<std::pair<double, double>> out;
  dropped = 0;
  for (const auto& [x, p] : points) {
    if (!(x > 0.0)) throw DomainError("loglog_fit: abscissae must be positive");
    if (!(p > 0.0)) {
      ++dropped;
      continue;
    }
    out.emplace_back(std::log(x), std::log(p));
  }
  if (out.size() < 3) throw DomainError("loglog_fit: fewer than three usable points");
  return out;
}

}  // namespace

FitResult loglog_fit(std::span<const std::pair<double, double>> points) {
  FitResult r;
  const auto lp = log_points(points, r.dropped);
  const double n = static_cast<double>(lp.size());
  double mx = 0.0, my = 0.0;
  for (const auto& [u, v] : lp) {
    mx += u;
    my += v;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [u, v] : lp) {
    sxx += (u - mx) * (u - mx);
    sxy += (u - mx) * (v - my);
    syy += (v - my) * (v - my);
  }
  if (sxx <= 0.0) throw DomainError("loglog_fit: abscissae are all equal");
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  double sse = 0.0;
  for (const auto& [u, v] : lp) {
    const double e = v - (r.intercept + r.slope * u);
    sse += e * e;
  }
  r.stderr_slope = lp.size() > 2 ? std::sqrt(sse / (n - 2.0) / sxx) : 0.0;
  r.r_squared = syy > 0.0 ? std::clamp(1.0 - sse / syy, 0.0, 1.0) : 1.0;
  return r;
}

Estimate loglog_intercept_fixed_slope(std::span<const std::pair<double, double>> points, double slope) {
  std::size_t dropped = 0;
  const auto lp = log_points(points, dropped);
  std::vector<double> c;
  c.reserve(lp.size());
  for (const auto& [u, v] : lp) c.push_back(v - slope * u);
  const MeanCI m = mean_ci(c);
  return {m.mean, m.stderr_};
}

double max_cdf_jump(const EmpiricalDistribution& dist) {
  if (dist.weighted()) throw DomainError("max_cdf_jump: weighted distributions are not supported");
  const auto s = dist.samples();
  if (s.empty()) return 0.0;
  std::size_t best = 1;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    best = std::max(best, j - i);
    i = j;
  }
  return static_cast<double>(best) / static_cast<double>(s.size());
}

MeanCI mean_ci(std::span<const double> values, std::optional<std::span<const double>> weights) {
  if (values.empty()) throw DomainError("mean_ci: empty input");
  MeanCI r;
  if (weights) {
    const auto w = *weights;
    if (w.size() != values.size()) throw DomainError("mean_ci: weights length mismatch");
    double total = 0.0;
    for (double v : w) total += v;
    if (!(total > 0.0)) throw DomainError("mean_ci: weights must have positive total");
    double m = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) m += w[i] / total * values[i];
    double var = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double wi = w[i] / total;
      var += wi * wi * (values[i] - m) * (values[i] - m);
    }
    r.mean = m;
    r.stderr_ = std::sqrt(var);
  } else {
    const double n = static_cast<double>(values.size());
    double m = 0.0;
    for (double v : values) m += v;
    m /= n;
    double ss = 0.0;
    for (double v : values) ss += (v - m) * (v - m);
    r.mean = m;
    r.stderr_ = values.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
  }
  r.halfwidth95 = 1.959963984540054 * r.stderr_;
  return r;
}

Estimate ratio_of_means(std::span<const double> num, std::span<const double> den) {
  if (num.size() != den.size() || num.empty()) throw DomainError("ratio_of_means: size mismatch or empty input");
  const double n = static_cast<double>(num.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < num.size(); ++i) {
    ma += num[i];
    mb += den[i];
  }
  ma /= n;
  mb /= n;
  if (mb == 0.0) throw DomainError("ratio_of_means: zero denominator mean");
  double vaa = 0.0, vbb = 0.0, vab = 0.0;
  for (std::size_t i = 0; i < num.size(); ++i) {
    const double da = num[i] - ma;
    const double db = den[i] - mb;
    vaa += da * da;
    vbb += db * db;
    vab += da * db;
  }
  const double dof = std::max(n - 1.0, 1.0);
  vaa /= dof;
  vbb /= dof;
  vab /= dof;
  const double r = ma / mb;
  const double var = (vaa - 2.0 * r * vab + r * r * vbb) / (mb * mb * n);
  return {r, std::sqrt(std::max(var, 0.0))};
}

Interval bootstrap_ci(std::span<const double> values,
                      const std::function<double(std::span<const double>)>& statistic, RngStream rng,
                      int resamples, double level) {
  if (values.empty() || resamples < 2) throw DomainError("bootstrap_ci: empty input or too few resamples");
  const std::size_t n = values.size();
  std::vector<double> buf(n);
  std::vector<double> stats;
  stats.reserve(static_cast<std::size_t>(resamples));
  for (int b = 0; b < resamples; ++b) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(rng.uniform() * static_cast<double>(n));
      buf[i] = values[std::min(k, n - 1)];
    }
    stats.push_back(statistic(buf));
  }
  std::sort(stats.begin(), stats.end());
  const double tail = 0.5 * (1.0 - level);
  auto pick = [&](double q) {
    const double pos = q * static_cast<double>(stats.size() - 1);
    return stats[static_cast<std::size_t>(std::lround(pos))];
  };
  return {pick(tail), pick(1.0 - tail)};
}

}  // namespace levyfp
