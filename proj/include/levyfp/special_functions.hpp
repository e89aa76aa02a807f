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

namespace levyfp {

struct SpecialFnTolerances {
  double rel_tol = 1e-10;
  int max_iter = 10000;
};

/// Regularized incomplete beta I_z(a, b), a, b > 0, z in [0, 1].
/// Continued fraction, evaluated on whichever side of (a+1)/(a+b+2) z lies.
double reg_inc_beta(double a, double b, double z, const SpecialFnTolerances& tol = {});

/// 1 - I_z(a, b) without cancellation (evaluated as I_{1-z}(b, a)).
double reg_inc_beta_complement(double a, double b, double z, const SpecialFnTolerances& tol = {});

/// Gamma(s) for s > 0.
double gamma_fn(double s);

/// Upper incomplete gamma Gamma(s, y) = int_y^inf e^{-u} u^{s-1} du, s > 0,
/// y >= 0 (not regularized). Series below y = s + 1, continued fraction above.
double upper_inc_gamma(double s, double y, const SpecialFnTolerances& tol = {});

}  // namespace levyfp
