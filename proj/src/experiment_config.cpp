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

#include "levyfp/experiment_config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <string>

#include "levyfp/errors.hpp"

namespace levyfp {

using nlohmann::json;

namespace {

// Reads the keys of one JSON object into fields, rejecting keys it does not
// know so that typos in a config file fail loudly.
class Section {
 public:
  Section(const json& root, const char* name) : name_(name) {
    if (root.contains(name)) {
      node_ = &root.at(name);
      if (!node_->is_object()) throw DomainError(std::string("config section '") + name + "' must be an object");
    }
  }

  template <class T>
  void read(const char* key, T& field) {
    seen_.insert(key);
    if (node_ == nullptr || !node_->contains(key)) return;
    try {
      field = node_->at(key).get<T>();
    } catch (const json::exception& e) {
      throw DomainError(std::string("config ") + name_ + "." + key + ": " + e.what());
    }
  }

  template <class T>
  void read(const char* key, std::optional<T>& field) {
    seen_.insert(key);
    if (node_ == nullptr || !node_->contains(key)) return;
    const json& v = node_->at(key);
    field = v.is_null() ? std::nullopt : std::optional<T>(v.get<T>());
  }

  void finish() const {
    if (node_ == nullptr) return;
    for (const auto& [key, value] : node_->items()) {
      if (!seen_.contains(key)) throw DomainError("unknown config key " + std::string(name_) + "." + key);
    }
  }

 private:
  const char* name_;
  const json* node_ = nullptr;
  std::set<std::string> seen_;
};

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

void require_positive(const std::vector<double>& grid, const char* what) {
  if (grid.empty()) throw DomainError(std::string(what) + " grid is empty");
  for (double v : grid) {
    if (!(v > 0.0)) throw DomainError(std::string(what) + " grid values must be positive");
  }
}

void require_n(std::size_t n, const char* what) {
  if (n < 1000) throw DomainError(std::string(what) + ": sample count must be at least 1000");
}

}  // namespace

StableParams ExperimentConfig::params() const { return make_params(alpha, rho); }

void ExperimentConfig::validate() const {
  (void)params();
  skeleton.validate();
  if (skeleton.dt_ladder.empty()) throw DomainError("dt_ladder must not be empty");
  require_n(n_samples, "n_samples");
  if (!(horizon_factor > 0.0)) throw DomainError("horizon_factor must be positive");
  if (!(censor_cap >= 0.0 && censor_cap <= 1.0)) throw DomainError("censor_cap must lie in [0, 1]");
  if (threads == 0) throw DomainError("threads must be at least 1");

  if (!(overshoot.x > 0.0)) throw DomainError("overshoot.x must be positive");
  require_n(overshoot.n_exact, "overshoot.n_exact");
  require_n(overshoot.n_path, "overshoot.n_path");
  if (!overshoot.repeat_seeds.empty()) require_n(overshoot.repeat_n, "overshoot.repeat_n");

  require_positive(joint_lt.lambda, "joint_lt.lambda");
  require_positive(joint_lt.mu, "joint_lt.mu");
  require_positive(joint_lt.x, "joint_lt.x");
  if (joint_lt.n_samples) require_n(*joint_lt.n_samples, "joint_lt.n_samples");
  if (!(joint_lt.dt > 0.0)) throw DomainError("joint_lt.dt must be positive");

  if (!(pr.gamma > 0.0 && pr.mu > 0.0 && pr.lambda > 0.0)) throw DomainError("pr: gamma, mu, lambda must be positive");
  if (!(pr.gamma > pr.mu)) throw DomainError("pr: gamma must exceed mu (the gamma/(gamma-mu) prefactor)");
  if (pr.n_samples) require_n(*pr.n_samples, "pr.n_samples");
  if (!(pr.dt > 0.0)) throw DomainError("pr.dt must be positive");

  require_positive(exponent.x, "exponent.x");
  require_positive(exponent.lambda, "exponent.lambda");
  require_n(exponent.n_samples, "exponent.n_samples");
  require_n(exponent.n_lambda, "exponent.n_lambda");
  if (exponent.x.size() < 3 || exponent.lambda.size() < 3) throw DomainError("exponent grids need three points");
  if (!(exponent.dt > 0.0 && exponent.dt_lambda > 0.0)) throw DomainError("exponent dt values must be positive");

  if (!(small_h.x > 0.0 && small_h.x_scaled > 0.0)) throw DomainError("small_h levels must be positive");
  require_positive(small_h.h, "small_h.h");

  if (!(limit_law.x > 0.0)) throw DomainError("limit_law.x must be positive");
  require_positive(limit_law.h, "limit_law.h");
  require_positive(limit_law.lambda, "limit_law.lambda");
  require_positive(limit_law.k_grid, "limit_law.k_grid");
  if (limit_law.k_grid.size() < 3) throw DomainError("limit_law.k_grid needs three points");
  if (limit_law.n_accept < 100) throw DomainError("limit_law.n_accept must be at least 100");
  if (!(limit_law.tilted_lambda > 0.0)) throw DomainError("limit_law.tilted_lambda must be positive");
  require_positive(limit_law.tilted_h, "limit_law.tilted_h");
  if (!(limit_law.tilted_rel_tol > 0.0)) throw DomainError("limit_law.tilted_rel_tol must be positive");
  if (!(limit_law.normalization_quantile > 0.0 && limit_law.normalization_quantile < 1.0)) {
    throw DomainError("limit_law.normalization_quantile must lie in (0, 1)");
  }

  require_n(identity.n_samples, "identity.n_samples");
  if (!(identity.dt > 0.0)) throw DomainError("identity.dt must be positive");
}

json ExperimentConfig::to_json() const {
  json j;
  j["defaults"] = {{"alpha", alpha},
                   {"rho", rho},
                   {"n_samples", n_samples},
                   {"dt", skeleton.dt},
                   {"max_time", skeleton.max_time},
                   {"dt_ladder", skeleton.dt_ladder},
                   {"horizon_factor", horizon_factor},
                   {"censor_cap", censor_cap},
                   {"seed", seed},
                   {"threads", threads},
                   {"output_dir", output_dir.string()}};
  j["overshoot"] = {{"x", overshoot.x},
                    {"n_exact", overshoot.n_exact},
                    {"n_path", overshoot.n_path},
                    {"repeat_seeds", overshoot.repeat_seeds},
                    {"repeat_n", overshoot.repeat_n},
                    {"ks_band_coef", overshoot.ks_band_coef},
                    {"ks_final_max", overshoot.ks_final_max},
                    {"min_decreasing", overshoot.min_decreasing}};
  j["joint_lt"] = {{"lambda", joint_lt.lambda}, {"mu", joint_lt.mu},   {"x", joint_lt.x},
                   {"n_samples", opt(joint_lt.n_samples)}, {"dt", joint_lt.dt}, {"sigma", joint_lt.sigma}};
  j["pr"] = {{"gamma", pr.gamma},         {"mu", pr.mu}, {"lambda", pr.lambda},
             {"n_samples", opt(pr.n_samples)}, {"dt", pr.dt}, {"sigma", pr.sigma}};
  j["exponent"] = {{"x", exponent.x},
                   {"n_samples", exponent.n_samples},
                   {"dt", exponent.dt},
                   {"lambda", exponent.lambda},
                   {"lambda_level", exponent.lambda_level},
                   {"n_lambda", exponent.n_lambda},
                   {"dt_lambda", exponent.dt_lambda},
                   {"slope_tol", exponent.slope_tol},
                   {"bootstrap", exponent.bootstrap}};
  j["small_h"] = {{"x", small_h.x}, {"h", small_h.h}, {"rel_tol", small_h.rel_tol}, {"x_scaled", small_h.x_scaled}};
  j["limit_law"] = {{"x", limit_law.x},
                    {"h", limit_law.h},
                    {"n_accept", limit_law.n_accept},
                    {"dt", limit_law.dt},
                    {"lambda", limit_law.lambda},
                    {"k_grid", limit_law.k_grid},
                    {"normalization_quantile", limit_law.normalization_quantile},
                    {"norm_lo", limit_law.norm_lo},
                    {"norm_hi", limit_law.norm_hi},
                    {"sigma", limit_law.sigma},
                    {"eps_factor", limit_law.eps_factor},
                    {"acceptance_floor", limit_law.acceptance_floor},
                    {"bootstrap", limit_law.bootstrap},
                    {"tilted_lambda", limit_law.tilted_lambda},
                    {"tilted_h", limit_law.tilted_h},
                    {"tilted_rel_tol", limit_law.tilted_rel_tol}};
  j["identity"] = {{"n_samples", identity.n_samples},
                   {"dt", identity.dt},
                   {"p_min", identity.p_min},
                   {"jump_factor", identity.jump_factor}};
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  if (!j.is_object()) throw DomainError("config root must be a JSON object");
  static const std::set<std::string> kSections = {"defaults", "overshoot", "joint_lt", "pr",
                                                  "exponent", "small_h",   "limit_law", "identity"};
  for (const auto& [key, value] : j.items()) {
    if (!kSections.contains(key)) throw DomainError("unknown config section '" + key + "'");
  }
  ExperimentConfig c;

  Section d(j, "defaults");
  std::string out = c.output_dir.string();
  d.read("alpha", c.alpha);
  d.read("rho", c.rho);
  d.read("n_samples", c.n_samples);
  d.read("dt", c.skeleton.dt);
  d.read("max_time", c.skeleton.max_time);
  d.read("dt_ladder", c.skeleton.dt_ladder);
  d.read("horizon_factor", c.horizon_factor);
  d.read("censor_cap", c.censor_cap);
  d.read("seed", c.seed);
  d.read("threads", c.threads);
  d.read("output_dir", out);
  d.finish();
  c.output_dir = out;

  Section o(j, "overshoot");
  o.read("x", c.overshoot.x);
  o.read("n_exact", c.overshoot.n_exact);
  o.read("n_path", c.overshoot.n_path);
  o.read("repeat_seeds", c.overshoot.repeat_seeds);
  o.read("repeat_n", c.overshoot.repeat_n);
  o.read("ks_band_coef", c.overshoot.ks_band_coef);
  o.read("ks_final_max", c.overshoot.ks_final_max);
  o.read("min_decreasing", c.overshoot.min_decreasing);
  o.finish();

  Section jl(j, "joint_lt");
  jl.read("lambda", c.joint_lt.lambda);
  jl.read("mu", c.joint_lt.mu);
  jl.read("x", c.joint_lt.x);
  jl.read("n_samples", c.joint_lt.n_samples);
  jl.read("dt", c.joint_lt.dt);
  jl.read("sigma", c.joint_lt.sigma);
  jl.finish();

  Section p(j, "pr");
  p.read("gamma", c.pr.gamma);
  p.read("mu", c.pr.mu);
  p.read("lambda", c.pr.lambda);
  p.read("n_samples", c.pr.n_samples);
  p.read("dt", c.pr.dt);
  p.read("sigma", c.pr.sigma);
  p.finish();

  Section e(j, "exponent");
  e.read("x", c.exponent.x);
  e.read("n_samples", c.exponent.n_samples);
  e.read("dt", c.exponent.dt);
  e.read("lambda", c.exponent.lambda);
  e.read("lambda_level", c.exponent.lambda_level);
  e.read("n_lambda", c.exponent.n_lambda);
  e.read("dt_lambda", c.exponent.dt_lambda);
  e.read("slope_tol", c.exponent.slope_tol);
  e.read("bootstrap", c.exponent.bootstrap);
  e.finish();

  Section s(j, "small_h");
  s.read("x", c.small_h.x);
  s.read("h", c.small_h.h);
  s.read("rel_tol", c.small_h.rel_tol);
  s.read("x_scaled", c.small_h.x_scaled);
  s.finish();

  Section l(j, "limit_law");
  l.read("x", c.limit_law.x);
  l.read("h", c.limit_law.h);
  l.read("n_accept", c.limit_law.n_accept);
  l.read("dt", c.limit_law.dt);
  l.read("lambda", c.limit_law.lambda);
  l.read("k_grid", c.limit_law.k_grid);
  l.read("normalization_quantile", c.limit_law.normalization_quantile);
  l.read("norm_lo", c.limit_law.norm_lo);
  l.read("norm_hi", c.limit_law.norm_hi);
  l.read("sigma", c.limit_law.sigma);
  l.read("eps_factor", c.limit_law.eps_factor);
  l.read("acceptance_floor", c.limit_law.acceptance_floor);
  l.read("bootstrap", c.limit_law.bootstrap);
  l.read("tilted_lambda", c.limit_law.tilted_lambda);
  l.read("tilted_h", c.limit_law.tilted_h);
  l.read("tilted_rel_tol", c.limit_law.tilted_rel_tol);
  l.finish();

  Section id(j, "identity");
  id.read("n_samples", c.identity.n_samples);
  id.read("dt", c.identity.dt);
  id.read("p_min", c.identity.p_min);
  id.read("jump_factor", c.identity.jump_factor);
  id.finish();

  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file " + path.string());
  json j;
  try {
    j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw DomainError("config file " + path.string() + ": " + e.what());
  }
  return from_json(j);
}

std::filesystem::path resolve_output_dir(const ExperimentConfig& cfg, const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("LEVYFP_OUTPUT_DIR"); env != nullptr && *env != '\0') return env;
  return cfg.output_dir;
}

}  // namespace levyfp
