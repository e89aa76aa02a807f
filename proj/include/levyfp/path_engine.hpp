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
#include <limits>
#include <utility>
#include <vector>

#include "levyfp/parallel.hpp"
#include "levyfp/rng.hpp"
#include "levyfp/stable_params.hpp"

namespace levyfp {

/// Random-walk skeleton X_{k dt}, k = 0, 1, ..., built from exact stable
/// increments. `max_time` censors first-passage searches.
struct SkeletonConfig {
  double dt = 1e-3;
  double max_time = 1e4;
  std::vector<double> dt_ladder = {1e-2, 1e-3, 1e-4};

  /// Throws DomainError unless dt > 0, max_time >= dt and the ladder is
  /// strictly decreasing and positive.
  void validate() const;

  /// Horizon factor * x^alpha: by scaling, the censored fraction is then the
  /// same for every level x. Levels with x^alpha below dt get factor * dt.
  static SkeletonConfig for_level(const StableParams& params, double x, double dt, double horizon_factor);
};

/// Number of grid points k >= 1 with k dt <= t.
std::uint64_t grid_steps(double t, double dt);

/// One realization of the first passage above x. When `censored`, t_x is the
/// horizon and position the skeleton value there; overshoot is then negative
/// and carries no meaning.
struct PassageSample {
  double t_x = 0.0;
  double position = 0.0;
  double overshoot = 0.0;
  bool censored = false;
  double dt_used = 0.0;
};

/// Running maximum of the skeleton over grid points in [0, horizon],
/// counting X_0 = 0. When `truncated`, the walk was stopped on first reaching
/// the requested cap and `value` is the first skeleton value >= cap.
struct SupremumSample {
  double value = 0.0;
  double horizon = 0.0;
  bool truncated = false;
  double dt_used = 0.0;
};

struct ConditionedSample {
  PassageSample sample;
  std::uint64_t attempts = 0;
};

/// First grid time with X >= x. Consumes increments from `rng` in chunks.
PassageSample first_passage(const StableParams& params, double x, const SkeletonConfig& cfg, RngStream& rng);

/// Skeleton supremum S_t. With a finite `stop_above` the walk ends once the
/// cap is reached; S_t is then only known to be >= the cap.
SupremumSample supremum_at(const StableParams& params, double t, const SkeletonConfig& cfg, RngStream& rng,
                           double stop_above = std::numeric_limits<double>::infinity());

/// S at an independent exponential time e_lambda, drawn first from `rng`.
SupremumSample supremum_at_exp(const StableParams& params, double lambda, const SkeletonConfig& cfg,
                               RngStream& rng,
                               double stop_above = std::numeric_limits<double>::infinity());

/// Rejection sampler for T_x given {K_x <= h}. Gives up with
/// AcceptanceRateError once ceil(3 / acceptance_floor) attempts have failed,
/// i.e. when the acceptance rate is credibly below the floor.
ConditionedSample sample_conditioned_passage(const StableParams& params, double x, double h,
                                             const SkeletonConfig& cfg, RngStream& rng,
                                             double acceptance_floor = 1e-6);

// ---------------------------------------------------------------------------
// Batches. Path i always draws from stream (seed, derive_stream_id({tag, i})),
// so a batch is bit-identical for any thread count.

struct BatchSpec {
  std::uint64_t seed = 42;
  std::uint64_t tag = 0;
  unsigned threads = 1;

  RngStream stream(std::uint64_t index) const { return RngStream(seed, derive_stream_id({tag, index})); }
};

/// Runs fn(rng, i) for each path and collects the results in index order.
template <class Fn>
auto run_paths(std::size_t n, const BatchSpec& spec, Fn&& fn) {
  using Result = decltype(fn(std::declval<RngStream&>(), std::size_t{}));
  std::vector<Result> out(n);
  parallel_for(n, spec.threads, [&](std::size_t i) {
    RngStream rng = spec.stream(i);
    out[i] = fn(rng, i);
  });
  return out;
}

std::vector<PassageSample> first_passage_batch(const StableParams& params, double x, const SkeletonConfig& cfg,
                                               std::size_t n, const BatchSpec& spec);

std::vector<SupremumSample> supremum_batch(const StableParams& params, double t, const SkeletonConfig& cfg,
                                           std::size_t n, const BatchSpec& spec,
                                           double stop_above = std::numeric_limits<double>::infinity());

std::vector<SupremumSample> supremum_exp_batch(const StableParams& params, double lambda,
                                               const SkeletonConfig& cfg, std::size_t n, const BatchSpec& spec,
                                               double stop_above = std::numeric_limits<double>::infinity());

struct ConditionedBatch {
  std::vector<PassageSample> accepted;
  /// Every attempt up to and including the last accepted one, in order. These
  /// are unconditioned draws of (T_x, K_x).
  std::vector<PassageSample> attempts;

  double acceptance_rate() const {
    return attempts.empty() ? 0.0 : static_cast<double>(accepted.size()) / static_cast<double>(attempts.size());
  }
};

/// The first `n_accept` attempts (by path index) with K_x <= h. Attempt
/// indices are shared across calls with the same spec, so the accepted set for
/// a smaller h is a subset of the set for a larger one.
ConditionedBatch conditioned_passage_batch(const StableParams& params, double x, double h,
                                           const SkeletonConfig& cfg, std::size_t n_accept,
                                           const BatchSpec& spec, double acceptance_floor = 1e-6);

/// Fraction of samples flagged censored.
double censored_fraction(const std::vector<PassageSample>& samples);

}  // namespace levyfp
