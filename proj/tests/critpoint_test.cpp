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


#include "hyperdet/critpoint.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "hyperdet/random.hpp"

using namespace hyperdet;

namespace {

AVector random_z(Rng& rng) {
  AVector z;
  for (auto& c : z.z) c = random_normal_complex(rng);
  return z;
}

AVector on_pattern(const std::array<double, 4>& r, double t) {
  const std::array<double, 4> th{t, kPi - t, kPi + t, -t};
  AVector z;
  for (std::size_t j = 0; j < 4; ++j) z[j] = r[j] * unit_phase(th[j]);
  return z;
}

AVector triangle() {
  return AVector{{1.0 / 3.0, unit_phase(2.0 * kPi / 3.0) / 3.0, unit_phase(4.0 * kPi / 3.0) / 3.0, 0.0}};
}

}  // namespace

TEST(vandermonde_f, examples) {
  EXPECT_EQ(vandermonde_f(AVector{{2.0, 2.0, Complex(0, 1), 5.0}}), Complex(0.0));
  EXPECT_NEAR(std::norm(vandermonde_f(triangle())), std::pow(3.0, -9.0), 1e-18);
  const Complex f = vandermonde_f(on_pattern({0.25, 0.25, 0.25, 0.25}, kPi / 4));
  EXPECT_NEAR(f.real(), -1.0 / 256.0, 1e-16);
  EXPECT_NEAR(f.imag(), 0.0, 1e-16);
}

TEST(vandermonde_f, antisymmetric_and_gauge_invariant) {
  for (int i = 0; i < 100; ++i) {
    Rng rng = make_rng(31, i);
    const AVector z = random_z(rng);
    const AVector swapped{{z[1], z[0], z[2], z[3]}};
    EXPECT_LT(std::abs(vandermonde_f(swapped) + vandermonde_f(z)), 1e-12 * std::abs(vandermonde_f(z)));
    const AVector rotated = z.scaled(unit_phase(1.234));
    EXPECT_NEAR(std::abs(vandermonde_f(rotated)), std::abs(vandermonde_f(z)), 1e-12 * std::abs(vandermonde_f(z)));
  }
}

TEST(w_vector, derivative_identities) {
  constexpr double h = 1e-6;
  for (int i = 0; i < 100; ++i) {
    Rng rng = make_rng(32, i);
    const AVector z = random_z(rng);
    const PolarA p = to_polar(z);
    const WVector w = w_vector(z);
    const Complex f = vandermonde_f(z);
    for (std::size_t j = 0; j < 4; ++j) {
      PolarA up = p, down = p;
      up.r[j] += h;
      down.r[j] -= h;
      const Complex dr = (vandermonde_f(from_polar(up)) - vandermonde_f(from_polar(down))) / (2.0 * h) / f;
      EXPECT_LT(std::abs(dr - w[j]), 1e-6) << i << " r" << j;
      up = p;
      down = p;
      up.theta[j] += h;
      down.theta[j] -= h;
      const Complex dt = (vandermonde_f(from_polar(up)) - vandermonde_f(from_polar(down))) / (2.0 * h) / f;
      EXPECT_LT(std::abs(dt - kI * p.r[j] * w[j]), 1e-6) << i << " theta" << j;
    }
  }
}

TEST(w_vector, phase_weighted_sum_vanishes) {
  for (int i = 0; i < 100; ++i) {
    Rng rng = make_rng(33, i);
    const AVector z = random_z(rng);
    const PolarA p = to_polar(z);
    const WVector w = w_vector(z);
    Complex s{};
    for (std::size_t j = 0; j < 4; ++j) s += unit_phase(-p.theta[j]) * w[j];
    EXPECT_LT(std::abs(s), 1e-12);
  }
}

TEST(w_vector, maximizer_conditions) {
  const AVector z = triangle();
  const WVector w = w_vector(z);
  EXPECT_FALSE(w.defined(3));
  Complex s{};
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_LT(std::abs(w[j].imag()), 1e-10);
    EXPECT_LT(std::abs(w[j] - w[0]), 1e-10);
    s += (w[j] - 1.0 / std::abs(z[j])) * unit_phase(-std::arg(z[j]));
  }
  EXPECT_LT(std::abs(s), 1e-12);
}

TEST(w_vector, coincident_coordinates) {
  try {
    w_vector(AVector{{1.0, 0.5, 1.0, 0.2}});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("z_0 and z_2"), std::string::npos);
  }
}

TEST(w_theta_form, agrees_with_w_vector) {
  for (int i = 0; i < 100; ++i) {
    Rng rng = make_rng(34, i);
    std::uniform_real_distribution<double> u(0.05, 1.0), t(0.01, kPi / 4 - 0.01);
    const std::array<double, 4> r{u(rng), u(rng), u(rng), u(rng)};
    const double theta = t(rng);
    const auto closed = w_theta_form(r, theta);
    const WVector w = w_vector(on_pattern(r, theta));
    for (std::size_t j = 0; j < 4; ++j) EXPECT_LT(std::abs(closed[j] - w[j]), 1e-12);
  }
}

TEST(w_theta_form, equal_radii_at_quarter_pi) {
  const auto w = w_theta_form({0.25, 0.25, 0.25, 0.25}, kPi / 4);
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_LT(std::abs(w[j].imag()), 1e-14);
    EXPECT_LT(std::abs(w[j] - w[0]), 1e-14);
  }
}

TEST(w_theta_form, quarter_pi_differences) {
  // r0 = r2, r1 = r3.
  for (double r0 : {0.3, 0.35, (3.0 + std::sqrt(3.0)) / 12.0}) {
    const double r1 = 0.5 - r0;
    const auto w = w_theta_form({r0, r1, r0, r1}, kPi / 4);
    const double expected = (r0 - r1) * (r0 * r0 - 4 * r0 * r1 + r1 * r1) / (2 * r0 * r1 * (r0 * r0 + r1 * r1));
    EXPECT_NEAR((w[1] - w[0]).real(), expected, 1e-12);
    EXPECT_NEAR((w[1] - w[0]).imag(), 0.0, 1e-12);
  }
  // r0 r2 = r1^2 = r3^2, r0 > r1.
  for (double r0 : {0.4, 0.5}) {
    // Solve r0 + 2 r1 + r1^2 / r0 = 1 for r1.
    const double r1 = r0 * (-1.0 + std::sqrt(1.0 + (1.0 - r0) / r0));
    const std::array<double, 4> r{r0, r1, r1 * r1 / r0, r1};
    const auto w = w_theta_form(r, kPi / 4);
    EXPECT_NEAR((w[3] - w[0]).real(), 3 * (r0 - r1) * (r0 - r1) / (2 * r1 * (r0 * r0 + r1 * r1)), 1e-12);
    EXPECT_GT((w[3] - w[0]).real(), 0.0);
  }
}

TEST(w_theta_form, vanishing_denominator) {
  EXPECT_THROW(w_theta_form({0.25, 0.25, 0.25, 0.25}, 0.0), DomainError);
}

TEST(real_w_chain, synthetic_critical_configurations) {
  // r0 r2 = r1 r3 and cos 2theta = (r0 - r2)(r1 - r3) / (4 r0 r2).
  int checked = 0;
  for (double r0 = 0.2; r0 < 0.6; r0 += 0.02) {
    for (double r1 = 0.1; r1 <= r0; r1 += 0.02) {
      const double r2 = r1 * (1 - r0 - r1) / (r0 + r1), r3 = r0 * (1 - r0 - r1) / (r0 + r1);
      if (!(r2 > 0) || !(r1 > r3)) continue;
      const double c = (r0 - r2) * (r1 - r3) / (4 * r0 * r2);
      if (!(c > 0 && c < 1)) continue;
      const auto chain = real_w_chain({r0, r1, r2, r3}, 0.5 * std::acos(c));
      for (std::size_t k = 1; k < 5; ++k) EXPECT_NEAR(chain[k], chain[0], 1e-10);
      ++checked;
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(phase_sum_residual, examples) {
  EXPECT_NEAR(phase_sum_residual({0.3, kPi - 0.3, kPi + 0.3, -0.3}), 0.0, 1e-15);
  EXPECT_NEAR(phase_sum_residual({0.0, 0.0, 0.0, 0.0}), 4.0, 1e-15);
  EXPECT_NEAR(phase_sum_residual({0.0, kPi / 2, kPi, 3 * kPi / 2}), 0.0, 1e-15);
}

TEST(criticality_residual, maximizer_is_certified) {
  const CriticalityReport r = criticality_residual(triangle());
  EXPECT_EQ(r.classification, Classification::one_zero);
  EXPECT_LT(r.max_imag, 1e-10);
  EXPECT_LT(r.max_pairwise_gap, 1e-10);
  EXPECT_LT(r.boundary_residual, 1e-10);
  EXPECT_TRUE(r.certified(1e-10));
}

TEST(criticality_residual, generic_point_is_not_critical) {
  Rng rng = make_rng(35, 0);
  AVector z = random_z(rng);
  z = z.scaled(1.0 / z.l1_radius());
  const CriticalityReport r = criticality_residual(z);
  EXPECT_EQ(r.classification, Classification::interior);
  EXPECT_GT(r.max_pairwise_gap, 1e-3);
}

TEST(criticality_residual, classification_and_errors) {
  EXPECT_THROW(criticality_residual(AVector{{1.0, 1.0, 0.0, 0.0}}), std::invalid_argument);
  const CriticalityReport two_zero = criticality_residual(AVector{{0.5, -0.5, 0.0, 0.0}});
  EXPECT_EQ(two_zero.classification, Classification::invalid);
  EXPECT_FALSE(two_zero.certified(1.0));
}

TEST(criticality_residual, theta_zero_branch_value) {
  // r0 - r1 + r2 - r3 = 0 with the quadratic condition: s = r0 + r1 a root of 8 s^2 - 8 s + 1.
  const double s = (2.0 + std::sqrt(2.0)) / 4.0, a = 0.45, b = s - a;
  const AVector z = on_pattern({a, 0.5 - a, b, 0.5 - b}, 0.0);
  EXPECT_NEAR(std::norm(vandermonde_f(z)), std::pow(2.0, -16), 1e-18);
}
