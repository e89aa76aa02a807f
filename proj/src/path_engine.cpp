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

#include "levyfp/path_engine.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "levyfp/errors.hpp"
#include "levyfp/samplers.hpp"

namespace levyfp {

void SkeletonConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("skeleton dt must be positive");
  if (!(max_time >= dt)) throw DomainError("skeleton max_time must be at least dt");
  for (std::size_t i = 0; i < dt_ladder.size(); ++i) {
    if (!(dt_ladder[i] > 0.0)) throw DomainError("dt ladder entries must be positive");
    if (i > 0 && !(dt_ladder[i] < dt_ladder[i - 1])) throw DomainError("dt ladder must be strictly decreasing");
  }
}

SkeletonConfig SkeletonConfig::for_level(const StableParams& params, double x, double dt, double horizon_factor) {
  SkeletonConfig cfg;
  cfg.dt = dt;
  cfg.max_time = horizon_factor * std::max(std::pow(x, params.alpha), dt);
  cfg.dt_ladder.clear();
  return cfg;
}

std::uint64_t grid_steps(double t, double dt) {
  return static_cast<std::uint64_t>(std::floor(t / dt * (1.0 + 1e-12)));
}

namespace {

struct WalkOutcome {
  double running_max = 0.0;
  double last = 0.0;
  std::uint64_t steps = 0;
  bool hit = false;
};

// Walks X_{k dt} for k = 1..n_steps and stops at the first k with X >= level.
// Increments are drawn in chunks that grow geometrically, so short walks do
// not pay for a full buffer.
WalkOutcome walk(const StableParams& params, double dt, std::uint64_t n_steps, double level, RngStream& rng) {
  constexpr std::size_t kMaxChunk = 512;
  alignas(64) std::array<double, kMaxChunk> incr;
  WalkOutcome out;
  double x = 0.0;
  double running_max = 0.0;
  std::size_t chunk = 32;
  std::uint64_t k = 0;
  while (k < n_steps) {
    const std::size_t n = static_cast<std::size_t>(std::min<std::uint64_t>(chunk, n_steps - k));
    fill_stable_increments(params, dt, rng, std::span(incr).first(n));
    for (std::size_t i = 0; i < n; ++i) {
      x += incr[i];
      if (x > running_max) {
        running_max = x;
        if (x >= level) {
          out.running_max = running_max;
          out.last = x;
          out.steps = k + i + 1;
          out.hit = true;
          return out;
        }
      }
    }
    k += n;
    chunk = std::min(kMaxChunk, chunk * 2);
  }
  out.running_max = running_max;
  out.last = x;
  out.steps = n_steps;
  return out;
}

}  // namespace

PassageSample first_passage(const StableParams& params, double x, const SkeletonConfig& cfg, RngStream& rng) {
  if (!(x > 0.0)) throw DomainError("passage level x must be positive");
  cfg.validate();
  const std::uint64_t n = grid_steps(cfg.max_time, cfg.dt);
  const WalkOutcome w = walk(params, cfg.dt, n, x, rng);
  PassageSample s;
  s.dt_used = cfg.dt;
  s.t_x = static_cast<double>(w.steps) * cfg.dt;
  s.position = w.last;
  s.overshoot = w.last - x;
  s.censored = !w.hit;
  return s;
}

SupremumSample supremum_at(const StableParams& params, double t, const SkeletonConfig& cfg, RngStream& rng,
                           double stop_above) {
  if (!(t > 0.0)) throw DomainError("supremum horizon must be positive");
  if (!(cfg.dt > 0.0)) throw DomainError("skeleton dt must be positive");
  const WalkOutcome w = walk(params, cfg.dt, grid_steps(t, cfg.dt), stop_above, rng);
  SupremumSample s;
  s.value = w.hit ? w.last : w.running_max;
  s.horizon = t;
  s.truncated = w.hit;
  s.dt_used = cfg.dt;
  return s;
}

SupremumSample supremum_at_exp(const StableParams& params, double lambda, const SkeletonConfig& cfg,
                               RngStream& rng, double stop_above) {
  if (!(lambda > 0.0)) throw DomainError("exponential time rate lambda must be positive");
  const double horizon = sample_exponential(lambda, rng);
  if (grid_steps(horizon, cfg.dt) == 0) {
    SupremumSample s;
    s.horizon = horizon;
    s.dt_used = cfg.dt;
    return s;
  }
  return supremum_at(params, horizon, cfg, rng, stop_above);
}

ConditionedSample sample_conditioned_passage(const StableParams& params, double x, double h,
                                             const SkeletonConfig& cfg, RngStream& rng, double acceptance_floor) {
  require_jumping_crossings(params, "conditioning on a small overshoot");
  if (!(h > 0.0)) throw DomainError("overshoot bound h must be positive");
  if (!(acceptance_floor > 0.0 && acceptance_floor <= 1.0)) throw DomainError("acceptance floor must be in (0, 1]");
  // After 3/floor straight failures the 95% upper bound on the rate is below the floor.
  const auto max_attempts = static_cast<std::uint64_t>(std::ceil(3.0 / acceptance_floor));
  ConditionedSample out;
  while (out.attempts < max_attempts) {
    ++out.attempts;
    PassageSample s = first_passage(params, x, cfg, rng);
    if (!s.censored && s.overshoot <= h) {
      out.sample = s;
      return out;
    }
  }
  std::ostringstream msg;
  msg << "no passage with overshoot <= " << h << " in " << out.attempts << " attempts (acceptance floor "
      << acceptance_floor << "); increase h or refine dt (dt = " << cfg.dt << ")";
  throw AcceptanceRateError(msg.str());
}

std::vector<PassageSample> first_passage_batch(const StableParams& params, double x, const SkeletonConfig& cfg,
                                               std::size_t n, const BatchSpec& spec) {
  cfg.validate();
  return run_paths(n, spec, [&](RngStream& rng, std::size_t) { return first_passage(params, x, cfg, rng); });
}

std::vector<SupremumSample> supremum_batch(const StableParams& params, double t, const SkeletonConfig& cfg,
                                           std::size_t n, const BatchSpec& spec, double stop_above) {
  return run_paths(n, spec,
                   [&](RngStream& rng, std::size_t) { return supremum_at(params, t, cfg, rng, stop_above); });
}

std::vector<SupremumSample> supremum_exp_batch(const StableParams& params, double lambda,
                                               const SkeletonConfig& cfg, std::size_t n, const BatchSpec& spec,
                                               double stop_above) {
  return run_paths(n, spec, [&](RngStream& rng, std::size_t) {
    return supremum_at_exp(params, lambda, cfg, rng, stop_above);
  });
}

ConditionedBatch conditioned_passage_batch(const StableParams& params, double x, double h,
                                           const SkeletonConfig& cfg, std::size_t n_accept,
                                           const BatchSpec& spec, double acceptance_floor) {
  require_jumping_crossings(params, "conditioning on a small overshoot");
  if (!(h > 0.0)) throw DomainError("overshoot bound h must be positive");
  if (!(acceptance_floor > 0.0 && acceptance_floor <= 1.0)) throw DomainError("acceptance floor must be in (0, 1]");
  cfg.validate();

  ConditionedBatch out;
  std::size_t round = std::max<std::size_t>(64, n_accept);
  while (out.accepted.size() < n_accept) {
    const std::size_t first = out.attempts.size();
    std::vector<PassageSample> fresh(round);
    parallel_for(round, spec.threads, [&](std::size_t i) {
      RngStream rng = spec.stream(first + i);
      fresh[i] = first_passage(params, x, cfg, rng);
    });
    for (const PassageSample& s : fresh) {
      out.attempts.push_back(s);
      if (!s.censored && s.overshoot <= h) {
        out.accepted.push_back(s);
        if (out.accepted.size() == n_accept) break;
      }
    }
    const double tried = static_cast<double>(out.attempts.size());
    const double rate = static_cast<double>(out.accepted.size()) / tried;
    // Rule-of-three style upper bound on the acceptance rate.
    const double rate_upper = (static_cast<double>(out.accepted.size()) + 3.0) / tried;
    if (out.accepted.size() < n_accept && tried >= 1000.0 && rate_upper < acceptance_floor) {
      std::ostringstream msg;
      msg << "acceptance rate " << rate << " for overshoot <= " << h << " is below the floor " << acceptance_floor
          << " after " << out.attempts.size() << " attempts; increase h or refine dt (dt = " << cfg.dt << ")";
      throw AcceptanceRateError(msg.str());
    }
    // Size the next round from the observed rate, with 20% slack.
    const std::size_t missing = n_accept - out.accepted.size();
    const double est = rate > 0.0 ? 1.2 * static_cast<double>(missing) / rate : 4.0 * tried;
    round = std::clamp<std::size_t>(static_cast<std::size_t>(est), 64, 1u << 22);
  }
  return out;
}

double censored_fraction(const std::vector<PassageSample>& samples) {
  if (samples.empty()) return 0.0;
  const auto n = std::count_if(samples.begin(), samples.end(), [](const PassageSample& s) { return s.censored; });
  return static_cast<double>(n) / static_cast<double>(samples.size());
}

}  // namespace levyfp
