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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "levyfp/path_engine.hpp"
#include "levyfp/stable_params.hpp"

namespace levyfp {

struct OvershootSettings {
  double x = 1.0;
  std::size_t n_exact = 100000;
  std::size_t n_path = 10000;
  std::vector<std::uint64_t> repeat_seeds = {43, 44};
  std::size_t repeat_n = 2500;
  double ks_band_coef = 1.63;  // exact-sampler KS must be below coef / sqrt(N)
  double ks_final_max = 0.05;  // path KS at the finest dt
  int min_decreasing = 2;      // seeds (out of all) whose KS must fall along the ladder
};

struct JointLtSettings {
  std::vector<double> lambda = {0.5, 1.0, 2.0};
  std::vector<double> mu = {0.5, 1.0, 2.0};
  std::vector<double> x = {0.5, 1.0};
  std::optional<std::size_t> n_samples;
  double dt = 1e-3;
  double sigma = 3.0;
};

struct PrSettings {
  double gamma = 2.0;
  double mu = 1.0;
  double lambda = 1.0;
  std::optional<std::size_t> n_samples;
  double dt = 1e-3;
  double sigma = 3.0;
};

struct ExponentSettings {
  std::vector<double> x = {0.01, 0.0129, 0.0167, 0.0215, 0.0278, 0.0359, 0.0464, 0.0599, 0.0774, 0.1};
  std::size_t n_samples = 1000000;
  double dt = 1e-4;
  std::vector<double> lambda = {1e-3, 2e-3, 5e-3, 1e-2};
  double lambda_level = 1.0;
  std::size_t n_lambda = 100000;
  double dt_lambda = 1e-3;
  double slope_tol = 0.05;
  int bootstrap = 200;
};

struct SmallHSettings {
  double x = 1.0;
  std::vector<double> h = {1e-2, 1e-3, 1e-4};
  double rel_tol = 0.01;
  double x_scaled = 4.0;
};

struct LimitLawSettings {
  double x = 1.0;
  std::vector<double> h = {0.05, 0.01};
  std::size_t n_accept = 5000;
  double dt = 1e-4;
  std::vector<double> lambda = {0.5, 1.0, 2.0};
  std::vector<double> k_grid = {0.01, 0.0129, 0.0167, 0.0215, 0.0278, 0.0359, 0.0464, 0.0599, 0.0774, 0.1};
  double normalization_quantile = 0.99;
  double norm_lo = 0.9;
  double norm_hi = 1.03;
  double sigma = 3.0;
  double eps_factor = 1e-4;
  double acceptance_floor = 1e-6;
  int bootstrap = 200;
  // Tilted small-h check on the unconditioned attempts.
  double tilted_lambda = 1.0;
  std::vector<double> tilted_h = {0.1, 0.03, 0.01};
  double tilted_rel_tol = 0.15;
};

struct IdentitySettings {
  std::size_t n_samples = 10000;
  double dt = 1e-4;
  double p_min = 0.01;
  double jump_factor = 5.0;
};

/// Everything one `verify` invocation needs. Loaded from JSON: the
/// "defaults" object holds the shared profile and each experiment has an
/// optional section of the same name (with '-' spelled '_').
struct ExperimentConfig {
  double alpha = 1.5;
  double rho = 0.5;
  std::size_t n_samples = 100000;
  SkeletonConfig skeleton{1e-3, 1e4, {1e-2, 1e-3, 1e-4}};
  double horizon_factor = 1e4;  // passage horizon = factor * x^alpha
  double censor_cap = 0.01;
  std::uint64_t seed = 42;
  unsigned threads = 1;
  std::filesystem::path output_dir = "levyfp-out";

  OvershootSettings overshoot;
  JointLtSettings joint_lt;
  PrSettings pr;
  ExponentSettings exponent;
  SmallHSettings small_h;
  LimitLawSettings limit_law;
  IdentitySettings identity;

  StableParams params() const;
  /// Throws DomainError on the first violated invariant.
  void validate() const;

  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
  static ExperimentConfig load(const std::filesystem::path& path);
};

/// Output directory precedence: explicit flag, then LEVYFP_OUTPUT_DIR, then
/// the config value.
std::filesystem::path resolve_output_dir(const ExperimentConfig& cfg, const std::optional<std::string>& flag);

}  // namespace levyfp
