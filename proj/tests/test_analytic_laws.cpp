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
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "levyfp/analytic_laws.hpp"
#include "levyfp/errors.hpp"
#include "levyfp/path_engine.hpp"
#include "levyfp/samplers.hpp"
#include "oracles.hpp"

using namespace levyfp;
using std::numbers::pi;

namespace {

const StableParams kP = make_params(1.5, 0.5);

std::vector<PassageSample> passages(double x, double dt, double max_time, std::size_t n, std::uint64_t tag) {
  SkeletonConfig sk;
  sk.dt = dt;
  sk.max_time = max_time;
  return first_passage_batch(kP, x, sk, n, BatchSpec{42, tag, 1});
}

}  // namespace

TEST_CASE("overshoot density closed form") {
  CHECK(overshoot_pdf(kP, 1.0, 0.5) == 0.0);
  CHECK(overshoot_pdf(kP, 1.0, 1.0) == 0.0);
  CHECK(overshoot_pdf(kP, 1.0, 2.0) == doctest::Approx(std::sin(0.75 * pi) / pi * 0.5).epsilon(1e-14));
  CHECK_THROWS_AS(overshoot_pdf(make_params(1.5, 1.0 / 1.5), 1.0, 2.0), DomainError);
  CHECK_THROWS_AS(overshoot_cdf(make_params(2.0, 0.5), 1.0, 2.0), DomainError);
  CHECK_THROWS_AS(kx_small_h_constant(make_params(1.5, 1.0 / 1.5), 1.0), DomainError);
}

TEST_CASE("overshoot density integrates to one") {
  // Doubles cannot resolve y within an ulp of x, and for alpha*rho near 1 that
  // sliver carries visible mass, so the first 1e-6 x above the level is taken
  // from the CDF and the rest is integrated.
  for (auto [alpha, ar] : {std::pair{1.2, 0.6}, {1.5, 0.6}, {1.5, 0.75}, {1.3, 0.75}, {1.5, 0.9}, {1.9, 0.9}}) {
    const StableParams p = make_params(alpha, ar / alpha);
    for (double x : {0.5, 1.0, 3.0}) {
      CAPTURE(alpha);
      CAPTURE(ar);
      CAPTURE(x);
      const double d = 1e-6 * x;
      const double body = oracle::integrate_half_line([&](double t) { return overshoot_pdf(p, x, x + d + t); });
      CHECK(body + overshoot_cdf(p, x, x + d) == doctest::Approx(1.0).epsilon(1e-8));
      const double k_total = oracle::integrate_half_line([&](double t) { return kx_pdf(p, x, t); });
      CHECK(k_total == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("overshoot CDF properties") {
  CHECK(overshoot_cdf(kP, 1.0, 1.0) == 0.0);
  CHECK(overshoot_cdf(kP, 1.0, 1e300) == doctest::Approx(1.0));
  CHECK(overshoot_cdf(kP, 1.0, INFINITY) == 1.0);

  const double h = 1e-5;
  const double fd = (overshoot_cdf(kP, 1.0, 2.0 + h) - overshoot_cdf(kP, 1.0, 2.0 - h)) / (2 * h);
  CHECK(fd == doctest::Approx(overshoot_pdf(kP, 1.0, 2.0)).epsilon(1e-6));

  for (double v : {1.001, 1.5, 2.0, 10.0, 1e4}) CHECK(overshoot_cdf(kP, 2.0, 2.0 * v) == doctest::Approx(overshoot_cdf(kP, 1.0, v)).epsilon(1e-13));

  double prev = 0.0;
  for (double y = 1.0; y < 1e3; y *= 1.1) {
    const double c = overshoot_cdf(kP, 1.0, y);
    CHECK(c >= prev);
    CHECK(c <= 1.0);
    prev = c;
  }
}

TEST_CASE("overshoot of K_x") {
  for (double y : {0.01, 0.5, 3.0}) CHECK(kx_pdf(kP, 1.0, y) == doctest::Approx(overshoot_pdf(kP, 1.0, 1.0 + y)).epsilon(1e-13));
  CHECK(kx_pdf(kP, 1.0, 0.0) == 0.0);
  CHECK(kx_pdf(kP, 1.0, -1.0) == 0.0);
}

TEST_CASE("small-h constant") {
  const double c1 = kx_small_h_constant(kP, 1.0);
  CHECK(c1 == doctest::Approx(std::sin(0.75 * pi) / (0.25 * pi)).epsilon(1e-14));
  CHECK(c1 == doctest::Approx(0.90032).epsilon(1e-5));
  CHECK(kx_small_h_constant(kP, 4.0) / c1 == doctest::Approx(std::pow(4.0, -0.25)).epsilon(1e-14));
  CHECK(overshoot_cdf(kP, 1.0, 1.0 + 1e-4) / std::pow(1e-4, 0.25) == doctest::Approx(c1).epsilon(0.01));
}

TEST_CASE("exact overshoot draws follow the analytic CDF") {
  RngStream rng(42, 1);
  const std::size_t n = 100000;
  std::vector<double> y(n);
  for (double& v : y) v = sample_overshoot_exact(kP, 1.0, rng);
  const double d = ks_one_sample(EmpiricalDistribution(std::move(y)), [](double v) { return overshoot_cdf(kP, 1.0, v); });
  CHECK(d < 1.63 / std::sqrt(double(n)));
}

TEST_CASE("asymptotic constants") {
  const auto c = AsymptoticConstants::from_k(kP, 0.6);
  CHECK(std::abs(c.k_star - 0.6 * std::tgamma(0.5)) <= 1e-12 * c.k_star);
  CHECK_THROWS_AS(AsymptoticConstants::from_k(kP, 0.0), DomainError);

  CHECK(asymptotic_small_lambda(kP, c, 1.0, 2.0, 1) == doctest::Approx(c.k_star).epsilon(1e-14));
  for (double mu : {0.5, 1.0, 2.0}) {
    CHECK(asymptotic_small_lambda(kP, c, 0.0, mu, 2) ==
          doctest::Approx(asymptotic_small_lambda(kP, c, 0.0, mu, 3)).epsilon(1e-12));
    const double r = asymptotic_small_lambda(kP, c, 1e-9, mu, 4) / asymptotic_small_lambda(kP, c, 0.0, mu, 3);
    CHECK(r == doctest::Approx(1.0).epsilon(1e-5));
  }
  CHECK_THROWS_AS(asymptotic_small_lambda(kP, c, 1.0, 1.0, 5), DomainError);

  // Noiseless power law recovers k.
  std::vector<std::pair<double, double>> pts;
  for (double x = 0.01; x < 0.11; x *= 1.3) pts.emplace_back(x, 0.6 * std::pow(x, 0.75));
  CHECK(estimate_k(kP, pts).k == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("joint Laplace transform estimators") {
  const auto lhs = passages(1.0, 1e-2, 1e3, 20000, 1);
  const auto small = passages(1e-6, 1e-5, 1.0, 2000, 2);
  SkeletonConfig sk;
  sk.dt = 1e-2;
  const auto sup = supremum_exp_batch(kP, 1.0, sk, 20000, BatchSpec{42, 3, 1});

  SUBCASE("limits and reductions") {
    CHECK(joint_lt_lhs(1.0, 1.0, 1e-6, small, 1.0).value > 0.9);
    CHECK(joint_lt_rhs(1.0, 1.0, 0.0, sup).value == 1.0);

    std::vector<double> e;
    for (const auto& p : lhs) e.push_back(p.censored ? 0.0 : std::exp(-p.t_x));
    CHECK(joint_lt_lhs(1.0, 0.0, 1.0, lhs, 1.0).value == doctest::Approx(mean_ci(e).mean).epsilon(1e-14));

    double above = 0.0;
    for (const auto& s : sup) above += s.value >= 1.0 ? 1.0 : 0.0;
    CHECK(joint_lt_rhs(1.0, 0.0, 1.0, sup).value == doctest::Approx(above / double(sup.size())).epsilon(1e-12));
  }

  SUBCASE("monotone in lambda, mu and x") {
    double prev = 2.0;
    for (double lambda : {0.1, 0.5, 1.0, 2.0}) {
      const double v = joint_lt_lhs(lambda, 1.0, 1.0, lhs, 1.0).value;
      CHECK(v < prev);
      prev = v;
    }
    prev = 2.0;
    for (double mu : {0.0, 0.5, 1.0, 2.0}) {
      const double v = joint_lt_lhs(1.0, mu, 1.0, lhs, 1.0).value;
      CHECK(v < prev);
      prev = v;
    }
    prev = 2.0;
    for (double x : {0.0, 0.5, 1.0, 2.0}) {
      const double v = joint_lt_rhs(1.0, 1.0, x, sup).value;
      CHECK(v < prev);
      prev = v;
    }
  }

  SUBCASE("both sides agree") {
    for (double mu : {0.5, 1.0, 2.0}) {
      const auto a = joint_lt_lhs(1.0, mu, 1.0, lhs, 1.0);
      const auto b = joint_lt_rhs(1.0, mu, 1.0, sup);
      CAPTURE(mu);
      CHECK(std::abs(a.value - b.value) <= 3.0 * std::hypot(a.stderr_, b.stderr_));
    }
  }

  SUBCASE("censoring cap") {
    const auto short_paths = passages(1.0, 1e-2, 0.05, 2000, 4);
    CHECK_THROWS_AS(joint_lt_lhs(1.0, 1.0, 1.0, short_paths, 0.01), CensoringError);
  }
}

TEST_CASE("density of the supremum at an exponential time") {
  // T e^{-lambda T} is negligible past t = 30 for lambda = 1.
  const auto t1 = passages(1.0, 1e-3, 30.0, 20000, 5);

  SUBCASE("integrates to the uncensored mass") {
    double total = 0.0;
    const double step = 0.01;
    for (double lx = -12.0; lx < 8.0; lx += step) {
      const double x = std::exp(lx + 0.5 * step);
      total += f_lambda_density(kP, 1.0, x, t1, 1.0).value * x * step;
    }
    double cens = 0.0;
    for (const auto& p : t1) cens += p.censored ? 1.0 : 0.0;
    CHECK(total == doctest::Approx(1.0 - cens / double(t1.size())).epsilon(0.03));
  }

  SUBCASE("matches the slope of the supremum CDF") {
    SkeletonConfig sk;
    sk.dt = 1e-3;
    const auto sup = supremum_exp_batch(kP, 1.0, sk, 40000, BatchSpec{42, 6, 1});
    const double w = 0.1;
    std::vector<double> in(sup.size());
    for (std::size_t i = 0; i < sup.size(); ++i) in[i] = std::abs(sup[i].value - 1.0) <= w ? 1.0 / (2 * w) : 0.0;
    const MeanCI fd = mean_ci(in);
    const Estimate f = f_lambda_density(kP, 1.0, 1.0, t1, 1.0);
    CHECK(std::abs(fd.mean - f.value) <= 3.0 * std::hypot(fd.stderr_, f.stderr_));
  }
}

TEST_CASE("small-lambda limit of the supremum density") {
  // Long horizon: lambda = 1e-3 weights passage times up to several thousand.
  const auto t1 = passages(1.0, 1e-2, 1e4, 20000, 7);
  std::vector<std::pair<double, double>> pts;
  for (double u = 0.01; u < 0.11; u *= 1.25) {
    const double cut = std::pow(u, -1.5);
    double above = 0.0;
    for (const auto& p : t1) above += (p.censored || p.t_x > cut) ? 1.0 : 0.0;
    pts.emplace_back(u, above / double(t1.size()));
  }
  const AsymptoticConstants c = estimate_k(kP, pts);
  CHECK(c.k > 0.5);
  CHECK(c.k < 0.8);
  const double lambda = 1e-3;
  const double lhs = std::pow(lambda, -0.5) * f_lambda_density(kP, lambda, 1.0, t1).value;
  CHECK(lhs == doctest::Approx(c.k * 1.5 * 0.5 * std::tgamma(0.5)).epsilon(0.10));

  const Estimate small = conditional_lt_limit(kP, c, 1.0, lambda, t1);
  CHECK(small.value == doctest::Approx(1.0).epsilon(0.1));
  for (double l : {0.1, 0.5, 1.0, 2.0}) {
    const double v = conditional_lt_limit(kP, c, 1.0, l, t1).value;
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
  }

  // A 95% interval on k of +-1.96 * 5% adds 5% of the value in quadrature.
  const double z = 1.959963984540054;
  const auto wide = AsymptoticConstants::from_k(kP, c.k, {c.k * (1.0 - z * 0.05), c.k * (1.0 + z * 0.05)});
  CHECK(wide.k_stderr() == doctest::Approx(0.05 * c.k));
  const Estimate bare = conditional_lt_limit(kP, AsymptoticConstants::from_k(kP, c.k), 1.0, lambda, t1);
  const Estimate w = conditional_lt_limit(kP, wide, 1.0, lambda, t1);
  CHECK(w.value == bare.value);
  CHECK(w.stderr_ == doctest::Approx(std::hypot(bare.stderr_, 0.05 * bare.value)));
  CHECK(small.stderr_ > bare.stderr_);
}

TEST_CASE("limit law estimator on a synthetic tail") {
  // P(T > t) = (1 + t)^{-1/2}: tail constant 1, so with k = 1, x = 1 the
  // limit CDF tends to 1.
  RngStream rng(8, 0);
  std::vector<double> t(200000);
  for (double& v : t) {
    const double u = rng.uniform();
    v = 1.0 / (u * u) - 1.0;
  }
  const auto c = AsymptoticConstants::from_k(kP, 1.0);
  CHECK(limit_law_cdf(kP, c, 1.0, 0.0, t).value == 0.0);
  CHECK(limit_law_cdf(kP, c, 1.0, 1e-12, t).value < 1e-3);
  CHECK(limit_law_cdf(kP, c, 1.0, 1e4, t).corrected == doctest::Approx(1.0).epsilon(0.03));

  std::vector<double> grid;
  for (double s = 0.01; s < 1e4; s *= 1.5) grid.push_back(s);
  const auto curve = limit_law_curve(kP, c, 1.0, grid, t);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    CHECK(curve[i] >= limit_law_cdf(kP, c, 1.0, grid[i], t).value);
    CHECK(curve[i] <= 1.0);
    if (i > 0) CHECK(curve[i] >= curve[i - 1]);
  }
  std::reverse(grid.begin(), grid.end());
  CHECK_THROWS_AS(limit_law_curve(kP, c, 1.0, grid, t), DomainError);
  LimitLawOptions warn;
  warn.warn_mass = 0.0;
  CHECK(limit_law_cdf(kP, c, 1.0, 1.0, t, warn).heavy_tail_warning);
  CHECK_FALSE(limit_law_cdf(make_params(1.5, 0.6), c, 1.0, 1.0, t, warn).heavy_tail_warning);
}

TEST_CASE("tilted overshoot probability") {
  // T independent of K: the tilt does not move the overshoot law.
  RngStream rng(21, 0);
  std::vector<PassageSample> ps(40000);
  for (auto& p : ps) {
    p.t_x = -std::log(rng.uniform());
    p.overshoot = rng.uniform();
  }
  ps[0].censored = true;
  const Estimate e = tilted_overshoot_cdf(2.0, 0.3, ps);
  CHECK(std::abs(e.value - 0.3) <= 4.0 * e.stderr_);
  CHECK(tilted_overshoot_cdf(1.0, 1.0, ps).value == doctest::Approx(1.0));
  CHECK_THROWS_AS(tilted_overshoot_cdf(1.0, 0.3, std::span(ps).first(1)), DomainError);

  // Weighting only by T: overshoot <= h exactly when T <= 1, so the tilted
  // probability is E[e^{-T}; T <= 1] / E[e^{-T}] = 1 - e^{-2} for T ~ Exp(1).
  for (auto& p : ps) p.overshoot = p.t_x <= 1.0 ? 0.0 : 1.0;
  ps[0].censored = false;
  const Estimate w = tilted_overshoot_cdf(1.0, 0.5, ps);
  CHECK(std::abs(w.value - (1.0 - std::exp(-2.0))) <= 4.0 * w.stderr_);
  CHECK_THROWS_AS(tilted_overshoot_cdf(0.0, 0.1, ps), DomainError);
  CHECK_THROWS_AS(tilted_overshoot_cdf(1.0, 0.1, {}), DomainError);
}

TEST_CASE("tilted small-h limit against the conditional transform") {
  // P_lambda(K <= h) / P(K <= h) * E[e^{-lambda T}] is the conditioned transform,
  // so the two limits differ by E[e^{-lambda T}] / (small-h constant).
  const auto t1 = passages(1.0, 1e-2, 1e3, 4000, 11);
  const auto c = AsymptoticConstants::from_k(kP, 0.65);
  for (double lambda : {0.5, 1.0, 2.0}) {
    std::vector<double> e;
    for (const auto& p : t1) e.push_back(p.censored ? 0.0 : std::exp(-lambda * p.t_x));
    const double pe = mean_ci(e).mean;
    const double tilted = tilted_small_h_limit(kP, c, 1.0, lambda, t1, 1.0).value;
    const double cond = conditional_lt_limit(kP, c, 1.0, lambda, t1, 1.0).value;
    CHECK(tilted * pe / kx_small_h_constant(kP, 1.0) == doctest::Approx(cond).epsilon(1e-12));
  }
  CHECK_THROWS_AS(tilted_small_h_limit(make_params(1.5, 2.0 / 3.0), c, 1.0, 1.0, t1), DomainError);
}
