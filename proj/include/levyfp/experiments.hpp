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
#include <span>
#include <string_view>

#include "levyfp/experiment_config.hpp"
#include "levyfp/report.hpp"

namespace levyfp {

// Each runner samples what it needs, compares against the closed forms and
// returns a finalized report. Sampling streams are keyed by (seed,
// experiment, shard), so results do not depend on the thread count.

/// Skeleton overshoot along the dt ladder and the exact Beta-ratio sampler,
/// both against the analytic CDF.
VerificationReport run_overshoot(const ExperimentConfig& cfg);
/// E[exp(-lambda T_x - mu X_{T_x})] against the supremum-at-exponential-time ratio.
VerificationReport run_joint_lt(const ExperimentConfig& cfg);
/// Level x replaced by an independent exponential variable.
VerificationReport run_pr(const ExperimentConfig& cfg);
/// Log-log slopes of P(S_1 <= x) in x and of P(S_{e_lambda} <= x) in lambda.
VerificationReport run_exponent(const ExperimentConfig& cfg);
/// Deterministic P(K_x <= h) / h^{1-alpha*rho} convergence.
VerificationReport run_small_h(const ExperimentConfig& cfg);
/// T_x conditioned on K_x <= h against the limit law and its Laplace transform.
VerificationReport run_limit_law(const ExperimentConfig& cfg);
/// S_1^{-alpha} against T_1, and the atom check on T_1.
VerificationReport run_identity(const ExperimentConfig& cfg);

struct ExperimentEntry {
  std::string_view name;
  VerificationReport (*run)(const ExperimentConfig&);
};

/// All experiments in the order `verify all` runs them.
std::span<const ExperimentEntry> experiment_registry();

/// Stream tag for shard (a, b) of the named experiment.
std::uint64_t experiment_tag(std::string_view name, std::uint64_t a = 0, std::uint64_t b = 0);

}  // namespace levyfp
