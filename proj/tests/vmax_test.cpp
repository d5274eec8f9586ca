// Copyright 2026 The hyperdet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "hyperdet/vmax.hpp"

#include <algorithm>
#include <cmath>

#include "gtest/gtest.h"
#include "hyperdet/critpoint.hpp"
#include "hyperdet/random.hpp"

using namespace hyperdet;

namespace {

std::vector<Complex> random_points(Rng& rng, int n) {
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (auto& c : z) c = random_normal_complex(rng);
  return z;
}

}  // namespace

TEST(vandermonde_n, examples) {
  const std::vector<Complex> two{0.0, 1.0};
  EXPECT_EQ(vandermonde_n(two), Complex(1.0));
  const std::vector<Complex> rep{0.5, Complex(0, 1), 0.5};
  EXPECT_EQ(vandermonde_n(rep), Complex(0.0));
  const std::vector<Complex> one{1.0};
  EXPECT_THROW(vandermonde_n(one), std::invalid_argument);
}

TEST(vandermonde_n, matches_f_up_to_sign) {
  for (int i = 0; i < 100; ++i) {
    Rng rng = make_rng(41, i);
    const auto z = random_points(rng, 4);
    const Complex v = vandermonde_n(z);
    const Complex f = vandermonde_f(AVector{{z[0], z[1], z[2], z[3]}});
    EXPECT_LT(std::abs(v - f), 1e-12 * std::abs(f));  // six factors, sign (-1)^6
  }
}

TEST(vandermonde_n, transposition_flips_sign) {
  Rng rng = make_rng(42, 0);
  auto z = random_points(rng, 6);
  const Complex v = vandermonde_n(z);
  std::swap(z[1], z[4]);
  EXPECT_LT(std::abs(vandermonde_n(z) + v), 1e-12 * std::abs(v));
}

TEST(lambda_n, values) {
  EXPECT_DOUBLE_EQ(lambda_n(2), 1.0);
  EXPECT_NEAR(lambda_n(4), std::pow(3.0, -4.5), 1e-15);
  EXPECT_NEAR(lambda_n(4) * lambda_n(4) / std::pow(3.0, -9.0), 1.0, 1e-13);
  EXPECT_NEAR(lambda_n(7) / std::pow(6.0, -18.0), 1.0, 1e-13);
  EXPECT_THROW(lambda_n(1), std::invalid_argument);
}

TEST(candidate_config, attains_lambda) {
  for (int n = 3; n <= 10; ++n) {
    const VnConfig c = candidate_config(n);
    EXPECT_EQ(c.n(), static_cast<std::size_t>(n));
    EXPECT_LT(c.constraint_residual(), 1e-15);
    EXPECT_NEAR(std::abs(vandermonde_n(c.points)) / lambda_n(n), 1.0, 1e-12) << n;
  }
  EXPECT_NEAR(std::norm(vandermonde_n(candidate_config(4).points)), std::pow(3.0, -9.0), 1e-18);
  EXPECT_NEAR(std::abs(vandermonde_n(candidate_config(3).points)), 0.25, 1e-15);
  EXPECT_THROW(candidate_config(2), std::invalid_argument);
}

TEST(canonicalize, gauge_and_permutation_orbit_collapses) {
  const VnConfig base = canonicalize(candidate_config(4));
  for (int i = 0; i < 20; ++i) {
    Rng rng = make_rng(43, i);
    VnConfig c = candidate_config(4);
    const Complex rot = unit_phase(std::uniform_real_distribution<double>(0, 2 * kPi)(rng));
    for (auto& p : c.points) p *= rot;
    std::shuffle(c.points.begin(), c.points.end(), rng);
    const VnConfig k = canonicalize(c);
    ASSERT_EQ(k.n(), base.n());
    for (std::size_t j = 0; j < k.n(); ++j) EXPECT_LT(std::abs(k.points[j] - base.points[j]), 1e-12);
  }
  // Some largest-modulus point sits on the positive real axis.
  EXPECT_TRUE(std::any_of(base.points.begin(), base.points.end(),
                          [](Complex p) { return p.imag() == 0.0 && std::abs(p.real() - 1.0 / 3.0) < 1e-15; }));
}

TEST(canonicalize, preserves_abs_vandermonde) {
  for (int i = 0; i < 1000; ++i) {
    Rng rng = make_rng(44, i);
    const VnConfig c{random_points(rng, 2 + i % 6)};
    const double before = std::abs(vandermonde_n(c.points));
    EXPECT_NEAR(std::abs(vandermonde_n(canonicalize(c).points)), before, 1e-12 * before);
  }
}

TEST(vn_objective, gradient_matches_finite_differences) {
  constexpr double h = 1e-6;
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + i % 5;
    Rng rng = make_rng(45, i);
    std::uniform_real_distribution<double> s(0.3, 1.2), t(0, 2 * kPi);
    Eigen::VectorXd x(2 * n - 1), g(2 * n - 1), dummy(2 * n - 1);
    for (int j = 0; j < n; ++j) x[j] = s(rng);
    for (int j = n; j < 2 * n - 1; ++j) x[j] = t(rng);
    detail::vn_objective(x, g, n);
    for (int k = 0; k < 2 * n - 1; ++k) {
      Eigen::VectorXd up = x, down = x;
      up[k] += h;
      down[k] -= h;
      const double fd = (detail::vn_objective(up, dummy, n) - detail::vn_objective(down, dummy, n)) / (2 * h);
      EXPECT_NEAR(g[k], fd, 1e-5) << "n=" << n << " k=" << k;
    }
  }
}

TEST(maximize_vn, small_n_equal_lambda) {
  const OptimizerReport r2 = maximize_vn(2, 10, 0, 1e-12);
  EXPECT_NEAR(r2.best_value, 1.0, 1e-6);
  const OptimizerReport r3 = maximize_vn(3, 20, 0, 1e-12);
  EXPECT_NEAR(r3.best_value, 0.25, 1e-8);
  const OptimizerReport r4 = maximize_vn(4, 50, 0, 1e-12);
  EXPECT_NEAR(r4.best_value * r4.best_value / std::pow(3.0, -9.0), 1.0, 1e-6);
  EXPECT_NEAR(r4.ratio, 1.0, 1e-6);
  EXPECT_LT(r4.best_config.constraint_residual(), 1e-12);
  EXPECT_LT(r4.criticality_residual, 1e-6);
}

TEST(maximize_vn, n2_degenerate_family) {
  // z1 = z0 - z0/|z0| with 0 < |z0| <= 1 also attains 1.
  for (double m : {0.1, 0.5, 1.0}) {
    const Complex z0 = std::polar(m, 0.7);
    const std::vector<Complex> z{z0, z0 - z0 / std::abs(z0)};
    EXPECT_NEAR(std::abs(z[0]) + std::abs(z[1]), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(vandermonde_n(z)), 1.0, 1e-15);
  }
}

TEST(maximize_vn, never_below_candidate) {
  for (int n = 3; n <= 6; ++n) {
    const OptimizerReport r = maximize_vn(n, 4, 3, 1e-12);
    EXPECT_GE(r.best_value, lambda_n(n) - 1e-12) << n;
  }
}

TEST(maximize_vn, monotone_in_restarts) {
  double prev = 0.0;
  for (int restarts : {1, 3, 6, 12}) {
    const OptimizerReport r = maximize_vn(6, restarts, 5, 1e-12);
    EXPECT_GE(r.best_value, prev * (1.0 - 1e-12));
    prev = r.best_value;
  }
}

TEST(maximize_vn, n7_beats_lambda) {
  const OptimizerReport r = maximize_vn(7, 200, 42, 1e-12);
  EXPECT_GT(r.ratio, 1.0 + 1e-6);
  EXPECT_NEAR(r.certified_value / r.best_value, 1.0, 1e-12);
  EXPECT_LT(r.criticality_residual, 1e-6);
}

TEST(maximize_vn, deterministic_and_thread_independent) {
  const OptimizerReport a = maximize_vn(5, 16, 9, 1e-12, 1);
  const OptimizerReport b = maximize_vn(5, 16, 9, 1e-12, 1);
  const OptimizerReport c = maximize_vn(5, 16, 9, 1e-12, 4);
  EXPECT_EQ(a.best_value, b.best_value);
  ASSERT_EQ(a.best_config.n(), b.best_config.n());
  for (std::size_t j = 0; j < a.best_config.n(); ++j) EXPECT_EQ(a.best_config.points[j], b.best_config.points[j]);
  EXPECT_NEAR(a.best_value, c.best_value, 1e-12 * a.best_value);
}

TEST(maximize_vn, rejects_bad_arguments) {
  EXPECT_THROW(maximize_vn(1, 5, 0, 1e-12), std::invalid_argument);
  EXPECT_THROW(maximize_vn(4, 0, 0, 1e-12), std::invalid_argument);
  EXPECT_THROW(maximize_vn(4, 5, 0, 0.0), std::invalid_argument);
}
