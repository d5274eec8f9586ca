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


#include "hyperdet/orbit.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "hyperdet/det.hpp"
#include "hyperdet/random.hpp"

using namespace hyperdet;

namespace {

AVector random_z(Rng& rng) {
  AVector z;
  for (auto& c : z.z) c = random_normal_complex(rng);
  return z;
}

QuartState random_state(Rng& rng) {
  QuartState::Amplitudes a;
  for (auto& c : a) c = random_normal_complex(rng);
  return QuartState(a).normalized();
}

}  // namespace

TEST(local_operator, invariants) {
  const Mat2 bad{{2.0, 0.0, 0.0, 2.0}};
  EXPECT_THROW(LocalOperator::unitary({bad, bad, bad, bad}), std::invalid_argument);
  EXPECT_THROW(LocalOperator::determinant_one({bad, bad, bad, bad}), std::invalid_argument);
  EXPECT_THROW(LocalOperator::generator(0, Mat2::identity()), std::invalid_argument);
  EXPECT_THROW(LocalOperator::generator(4, Mat2{}), std::out_of_range);
}

TEST(apply_local, identity_and_unitary) {
  Rng rng = make_rng(51, 0);
  const QuartState psi = random_state(rng);
  EXPECT_EQ((apply_local(LocalOperator::identity(), psi) - psi).norm(), 0.0);
  for (int i = 0; i < 50; ++i) {
    Rng r = make_rng(51, i + 1);
    EXPECT_NEAR(apply_local(random_su(r), psi).norm(), 1.0, 1e-12);
  }
}

TEST(apply_local, determinant_one_preserves_det4) {
  for (int i = 0; i < 50; ++i) {
    Rng rng = make_rng(52, i);
    const QuartState psi = random_state(rng);
    const Complex d = det4(psi);
    EXPECT_LT(std::abs(det4(apply_local(random_sl(rng, 0.5), psi)) - d), 1e-8 * std::abs(d));
  }
}

TEST(apply_local, rejects_generators) {
  EXPECT_THROW(apply_local(sl2_basis()[0], basis_u(0)), std::invalid_argument);
}

TEST(sl2_basis, traceless_and_exponentiates_to_sl) {
  const auto basis = sl2_basis();
  EXPECT_EQ(basis.size(), 12U);
  for (const auto& x : basis) {
    EXPECT_EQ(x.kind(), OperatorKind::lie_algebra_generator);
    const Mat2& m = x.factor(x.slot());
    EXPECT_EQ(m.trace(), Complex(0.0));
    EXPECT_NEAR(std::abs(expm_traceless(Complex(0.1) * m).det() - 1.0), 0.0, 1e-15);
  }
}

TEST(expm_traceless, matches_series) {
  const Mat2 x{{Complex(0.3, 0.1), Complex(-0.2, 0.4), Complex(0.5, 0.0), Complex(-0.3, -0.1)}};
  Mat2 sum = Mat2::identity(), term = Mat2::identity();
  for (int k = 1; k < 30; ++k) {
    term = Complex(1.0 / k) * (term * x);
    sum = sum + term;
  }
  EXPECT_LT(expm_traceless(x).distance(sum), 1e-14);
}

TEST(tangent_map, ranks) {
  EXPECT_EQ(tangent_map(embed_A(state_L())).rank, 12);
  EXPECT_LT(tangent_map(QuartState::ket(0)).rank, 12);
  Rng rng = make_rng(53, 0);
  AVector z = random_z(rng);
  const QuartState psi = embed_A(z);
  EXPECT_EQ(tangent_map(psi).rank, 12);
  EXPECT_EQ(tangent_map(apply_local(random_sl(rng, 0.5), psi)).rank, 12);
  // A product state stays rank-deficient under SL.
  const QuartState prod = QuartState::product({{{1.0, 0.5}, {0.3, -1.0}, {Complex(0, 1), 2.0}, {1.0, 1.0}}});
  const int r = tangent_map(prod).rank;
  EXPECT_EQ(tangent_map(apply_local(random_sl(rng, 0.5), prod)).rank, r);
}

TEST(is_generic, examples) {
  EXPECT_TRUE(is_generic(embed_A(state_L())));
  EXPECT_FALSE(is_generic(QuartState::ket(0)));
  EXPECT_FALSE(is_generic(embed_A(AVector{{1.0, 1.0, 0.0, 0.0}})));
}

TEST(is_generic, agrees_with_det4) {
  for (int i = 0; i < 200; ++i) {
    Rng rng = make_rng(54, i);
    QuartState psi;
    switch (i % 3) {
      case 0: psi = random_state(rng); break;
      case 1: psi = embed_A(random_z(rng)).normalized(); break;
      default: {
        // Non-generic: two squared coordinates coincide.
        AVector z = random_z(rng);
        z[1] = -z[0];
        psi = apply_local(random_sl(rng, 0.3), embed_A(z)).normalized();
      }
    }
    const bool by_det = std::abs(det4(psi)) > 1e-12 * std::pow(psi.norm(), 24);
    EXPECT_EQ(is_generic(psi), by_det) << i;
  }
}

TEST(kempf_ness, residual_on_A) {
  EXPECT_LT(kempf_ness_residual(AVector{{1.0, 0.0, 0.0, 0.0}}), 1e-14);
  for (int i = 0; i < 1000; ++i) {
    Rng rng = make_rng(55, i);
    const AVector z = random_z(rng);
    EXPECT_LT(kempf_ness_residual(z), 1e-12 * z.norm() * z.norm());
  }
  double off = 0.0;
  for (int i = 0; i < 20; ++i) {
    Rng rng = make_rng(56, i);
    off = std::max(off, kempf_ness_residual(random_state(rng)));
  }
  EXPECT_GT(off, 1e-3);
}

TEST(norm_min_probe, examples) {
  EXPECT_GE(norm_min_probe(state_L(), 500, 7).min_ratio, 1.0 - 1e-9);
  const NormProbe u = norm_min_probe(state_L(), 200, 7, ProbeKind::unitary);
  EXPECT_NEAR(u.min_ratio, 1.0, 1e-12);
  EXPECT_NEAR(u.max_ratio, 1.0, 1e-12);
  EXPECT_THROW(norm_min_probe(state_L(), 0, 7), std::invalid_argument);
  // diag(2, 1/2) on slot 1 applied to u0.
  const LocalOperator g = LocalOperator::determinant_one(
      {Mat2::diag(2.0, 0.5), Mat2::identity(), Mat2::identity(), Mat2::identity()});
  EXPECT_GT(apply_local(g, basis_u(0)).norm(), 1.0);
}

TEST(norm_min_probe, inequality_chain) {
  // |det4(g z)| = ||z||^24 |det_A(z / ||z||)| <= 3^-9 ||g z||^24.
  for (int i = 0; i < 100; ++i) {
    Rng rng = make_rng(57, i);
    const AVector z = random_z(rng);
    const QuartState gz = apply_local(random_sl(rng, 0.5), embed_A(z));
    const double lhs = std::abs(det4(gz));
    const double mid = std::pow(z.norm(), 24) * std::abs(det_A(z.scaled(1.0 / z.norm())));
    EXPECT_LT(std::abs(lhs - mid), 1e-8 * mid);
    EXPECT_LE(lhs, std::pow(3.0, -9.0) * std::pow(gz.norm(), 24) * (1.0 + 1e-8));
  }
}
