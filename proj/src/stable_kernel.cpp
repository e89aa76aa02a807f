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

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "levyfp/errors.hpp"
#include "levyfp/samplers.hpp"

namespace levyfp {

namespace {

constexpr std::size_t kChunk = 256;

struct CmsConstants {
  double alpha;
  double inv_alpha;
  double tail_exponent;  // (1 - alpha) / alpha
  double shift;          // alpha * B with B = arctan(beta tan(pi alpha / 2)) / alpha
  double scale;          // dt^{1/alpha} * sigma * (1 + beta^2 tan^2(pi alpha / 2))^{1/(2 alpha)}
};

CmsConstants cms_constants(const StableParams& p, double dt) {
  const double t = std::tan(std::numbers::pi * p.alpha / 2.0);
  const double bt = p.alpha == 2.0 ? 0.0 : p.skewness * t;
  CmsConstants c;
  c.alpha = p.alpha;
  c.inv_alpha = 1.0 / p.alpha;
  c.tail_exponent = (1.0 - p.alpha) / p.alpha;
  c.shift = std::atan(bt);
  c.scale = std::pow(dt, c.inv_alpha) * p.scale * std::pow(1.0 + bt * bt, 0.5 * c.inv_alpha);
  return c;
}

// u, w uniform on (0, 1). V = pi (u - 1/2), W = -log w.
void transform(const CmsConstants& c, const double* __restrict u, const double* __restrict w,
               double* __restrict out, std::size_t n) {
  constexpr double pi = std::numbers::pi;
  constexpr double tiny = 0x1p-1000;
#pragma omp simd
  for (std::size_t i = 0; i < n; ++i) {
    const double v = pi * (u[i] - 0.5);
    const double log_w = std::log(-std::log(w[i]));
    const double shifted = c.alpha * v + c.shift;
    const double cos_v = std::fmax(std::cos(v), tiny);
    const double cos_r = std::fmax(std::cos(v - shifted), tiny);
    const double log_mag = -c.inv_alpha * std::log(cos_v) + c.tail_exponent * (std::log(cos_r) - log_w);
    out[i] = c.scale * std::sin(shifted) * std::exp(log_mag);
  }
}

}  // namespace

void fill_stable_increments(const StableParams& params, double dt, RngStream& rng, std::span<double> out) {
  if (!(dt > 0.0)) throw DomainError("increment time step must be positive");
  const CmsConstants c = cms_constants(params, dt);
  alignas(64) std::array<double, kChunk> u;
  alignas(64) std::array<double, kChunk> w;
  for (std::size_t begin = 0; begin < out.size(); begin += kChunk) {
    const std::size_t n = std::min(kChunk, out.size() - begin);
    rng.fill_uniform_pairs(std::span(u).first(n), std::span(w).first(n));
    transform(c, u.data(), w.data(), out.data() + begin, n);
  }
}

double sample_stable_increment(const StableParams& params, double dt, RngStream& rng) {
  if (!(dt > 0.0)) throw DomainError("increment time step must be positive");
  const CmsConstants c = cms_constants(params, dt);
  double u, w, out;
  rng.fill_uniform_pairs(std::span(&u, 1), std::span(&w, 1));
  transform(c, &u, &w, &out, 1);
  return out;
}

}  // namespace levyfp
