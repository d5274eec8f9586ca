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


#include "hyperdet/luequiv.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

#include "gtest/gtest.h"
#include "hyperdet/det.hpp"
#include "hyperdet/random.hpp"

using namespace hyperdet;

namespace {

using Perm = std::array<int, 4>;

Perm compose_transposition(Perm p, int i) {
  std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i + 1)]);
  return p;
}

AVector random_z(Rng& rng) {
  AVector z;
  for (auto& c : z.z) c = random_normal_complex(rng);
  return z;
}

}  // namespace

TEST(permutation_unitary, swaps_basis_vectors) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) {
      const int k = j == i ? i + 1 : (j == i + 1 ? i : j);
      const QuartState moved = apply_local(permutation_unitary(i), basis_u(j));
      EXPECT_LT((moved - basis_u(k)).norm(), 1e-14) << "U" << i << " u" << j;
    }
  }
  EXPECT_THROW(permutation_unitary(3), std::out_of_range);
}

TEST(permutation_unitary, factors_unitary) {
  for (int i = 0; i < 3; ++i) {
    const LocalOperator u = permutation_unitary(i);
    for (const auto& f : u.factors()) EXPECT_TRUE(f.is_unitary(1e-15));
  }
}

TEST(apply_transposition, moves_coordinates) {
  Rng rng = make_rng(61, 0);
  const AVector z = random_z(rng);
  for (int i = 0; i < 3; ++i) {
    const AVector t = apply_transposition(i, z);
    AVector expect = z;
    std::swap(expect[static_cast<std::size_t>(i)], expect[static_cast<std::size_t>(i + 1)]);
    EXPECT_LT(t.distance(expect), 1e-14);
  }
}

TEST(apply_transposition, generates_all_permutations) {
  // Breadth-first search over words in U_0, U_1, U_2.
  std::map<Perm, int> depth{{Perm{0, 1, 2, 3}, 0}};
  std::queue<Perm> frontier;
  frontier.push(Perm{0, 1, 2, 3});
  while (!frontier.empty()) {
    const Perm p = frontier.front();
    frontier.pop();
    for (int i = 0; i < 3; ++i) {
      const Perm q = compose_transposition(p, i);
      if (!depth.count(q)) {
        depth[q] = depth[p] + 1;
        frontier.push(q);
      }
    }
  }
  EXPECT_EQ(depth.size(), 24U);
  int longest = 0;
  for (const auto& [p, d] : depth) longest = std::max(longest, d);
  EXPECT_LE(longest, 6);

  // Realize one word of length 6 through the operators.
  Rng rng = make_rng(62, 0);
  const AVector z = random_z(rng);
  AVector moved = z;
  Perm p{0, 1, 2, 3};
  for (int i : {0, 1, 2, 0, 1, 0}) {
    moved = apply_transposition(i, moved);
    p = compose_transposition(p, i);
  }
  for (std::size_t j = 0; j < 4; ++j) EXPECT_LT(std::abs(moved[j] - z[static_cast<std::size_t>(p[j])]), 1e-13);
}

TEST(lift_squares, principal_roots) {
  const std::vector<Complex> w{Complex(4.0), Complex(-1.0), Complex(0.0, 2.0), Complex(0.0)};
  const AVector z = lift_squares(w);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_LT(std::abs(z[j] * z[j] - w[j]), 1e-15);
  EXPECT_EQ(z[0], Complex(2.0));
  const std::vector<Complex> three{1.0, 1.0, 1.0};
  EXPECT_THROW(lift_squares(three), std::invalid_argument);
}

TEST(maximizer, family_members_attain_bound) {
  const double target = std::pow(3.0, -9.0);
  for (int i = 0; i < 200; ++i) {
    Rng rng = make_rng(63, i);
    MaximizerParams p;
    p.zero_index = static_cast<int>(rng() % 4);
    p.phase = std::uniform_real_distribution<double>(0.0, 2.0 * kPi)(rng);
    p.orientation = (rng() % 2) ? 1 : -1;
    p.root_signs = static_cast<unsigned>(rng() % 8);
    const AVector z = maximizer(p);
    EXPECT_NEAR(z.norm(), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(det_A(z)), target, 1e-12 * target);
    EXPECT_EQ(z[static_cast<std::size_t>(p.zero_index)], Complex(0.0));
  }
  MaximizerParams base;
  EXPECT_LT(maximizer(base).distance(state_L()), 1e-15);
  base.orientation = -1;
  EXPECT_LT(maximizer(base).distance(state_Lprime()), 1e-15);
  base.orientation = 0;
  EXPECT_THROW(maximizer(base), std::invalid_argument);
  base.orientation = 1;
  base.zero_index = 4;
  EXPECT_THROW(maximizer(base), std::out_of_range);
}

TEST(canonicalize_maximizer, fixed_points) {
  const CanonicalForm l = canonicalize_maximizer(state_L());
  EXPECT_FALSE(l.is_Lprime);
  EXPECT_LT(l.distance, 1e-14);
  EXPECT_TRUE(l.transcript.empty());
  const CanonicalForm lp = canonicalize_maximizer(state_Lprime());
  EXPECT_TRUE(lp.is_Lprime || lp.distance < 1e-14);
}

TEST(canonicalize_maximizer, zero_moved_to_last_slot) {
  MaximizerParams p;
  p.zero_index = 0;
  p.phase = 1.3;
  const CanonicalForm f = canonicalize_maximizer(maximizer(p));
  EXPECT_LT(f.distance, 1e-12);
  EXPECT_LT(std::abs(f.z[3]), 1e-14);
  EXPECT_FALSE(f.transcript.empty());
  for (const auto& m : f.transcript) EXPECT_FALSE(m.describe().empty());
}

TEST(canonicalize_maximizer, closes_over_family) {
  for (int i = 0; i < 100; ++i) {
    Rng rng = make_rng(64, i);
    MaximizerParams p;
    p.zero_index = static_cast<int>(rng() % 4);
    p.phase = std::uniform_real_distribution<double>(0.0, 2.0 * kPi)(rng);
    p.orientation = (rng() % 2) ? 1 : -1;
    p.root_signs = static_cast<unsigned>(rng() % 8);
    const CanonicalForm f = canonicalize_maximizer(maximizer(p));
    EXPECT_LT(f.distance, 1e-8) << i;
    EXPECT_NEAR(std::abs(det_A(f.z)), std::pow(3.0, -9.0), 1e-12);
  }
}

TEST(canonicalize_maximizer, rejects_non_maximizers) {
  EXPECT_THROW(canonicalize_maximizer(AVector{{1.0, 0.0, 0.0, 0.0}}), std::invalid_argument);
  EXPECT_THROW(canonicalize_maximizer(state_L().scaled(2.0)), std::invalid_argument);
}

TEST(lu_search, examples) {
  const QuartState l = embed_A(state_L());
  const QuartState lp = embed_A(state_Lprime());
  EXPECT_NEAR(lu_search(l, l, 1, 0).fidelity, 1.0, 1e-12);
  const LuSearchResult r = lu_search(l, lp, 64, 1);
  EXPECT_GT(r.fidelity, 1.0 - 1e-6);
  EXPECT_NEAR(std::abs(lp.inner(apply_local(r.witness, l))), r.fidelity, 1e-9);
  EXPECT_LT(lu_search(l, QuartState::ket(0), 8, 1).fidelity, 1.0 - 1e-3);
  EXPECT_THROW(lu_search(embed_A(state_L().scaled(2.0)), l, 4, 0), std::invalid_argument);
  EXPECT_THROW(lu_search(l, l, 0, 0), std::invalid_argument);
}

TEST(lu_search, abs_det_is_lu_invariant) {
  for (int i = 0; i < 50; ++i) {
    Rng rng = make_rng(65, i);
    QuartState::Amplitudes a;
    for (auto& c : a) c = random_normal_complex(rng);
    const QuartState psi = QuartState(a).normalized();
    const double d = std::abs(det4(psi));
    EXPECT_NEAR(std::abs(det4(apply_local(random_su(rng), psi))), d, 1e-8 * d);
  }
}
