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

#pragma once

// Local-unitary structure of the maximizers of |Det| on A: the three
// slot-wise unitaries that transpose neighbouring u-basis vectors, the
// explicit maximizer family, the reduction of any family member to |L> or
// |L'>, and a fidelity search for LU-equivalence witnesses.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <sstream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hyperdet/common.hpp"
#include "hyperdet/det.hpp"
#include "hyperdet/optimize.hpp"
#include "hyperdet/orbit.hpp"
#include "hyperdet/qstate.hpp"
#include "hyperdet/random.hpp"

namespace hyperdet {

/// U_i swaps u_i and u_{i+1} and fixes the other two basis vectors.
/// U_1 = (1/4) H (x) H (x) H (x) H with H = [[1, 1], [1, -1]] is stored as
/// four factors H / sqrt(2).
inline LocalOperator permutation_unitary(int i) {
  const Complex mi{0.0, -1.0};
  switch (i) {
    case 0:
      return LocalOperator::unitary(
          {Mat2::diag(1.0, mi), Mat2::diag(1.0, mi), Mat2::diag(1.0, kI), Mat2::diag(1.0, kI)});
    case 1: {
      const double h = 1.0 / std::sqrt(2.0);
      const Mat2 had{{h, h, h, -h}};
      return LocalOperator::unitary({had, had, had, had});
    }
    case 2:
      return LocalOperator::unitary(
          {Mat2::diag(1.0, kI), Mat2::diag(1.0, mi), Mat2::diag(1.0, mi), Mat2::diag(1.0, kI)});
    default:
      throw std::out_of_range("permutation_unitary: index must be in 0..2");
  }
}

/// Applies U_i to the embedded vector and reads back A-coordinates.
inline AVector apply_transposition(int i, const AVector& z) {
  return project_A(apply_local(permutation_unitary(i), embed_A(z))).z;
}

/// A-point whose squared coordinates are w, principal square roots.
inline AVector lift_squares(std::span<const Complex> w) {
  if (w.size() != 4) throw std::invalid_argument("lift_squares: need four squared coordinates");
  AVector z;
  for (std::size_t j = 0; j < 4; ++j) z[j] = std::sqrt(w[j]);
  return z;
}

/// A member of the maximizer family of |Det| on the unit sphere of A.
struct MaximizerParams {
  int zero_index = 3;   ///< coordinate that vanishes
  double phase = 0.0;   ///< rotation of the triangle formed by the squares
  int orientation = 1;  ///< +1: |L> pattern, -1: |L'> pattern
  /// Bit m flips the sign of the m-th nonzero coordinate (both square roots
  /// of a squared coordinate are maximizers).
  unsigned root_signs = 0;
};

/// Nonzero coordinates z_m = e^{i phase/2} s_m / sqrt(3) with s = (1, w, w*)
/// for orientation +1 and (1, w^2, w*^2) for -1, w = e^{i pi/3}; the squares
/// z_m^2 = e^{i (phase + orientation 2 pi m / 3)} / 3 form an equilateral
/// triangle of radius 1/3.
inline AVector maximizer(const MaximizerParams& p) {
  if (p.zero_index < 0 || p.zero_index > 3) throw std::out_of_range("maximizer: zero_index must be in 0..3");
  if (p.orientation != 1 && p.orientation != -1) throw std::invalid_argument("maximizer: orientation must be +-1");
  const AVector pattern = p.orientation == 1 ? state_L() : state_Lprime();
  const Complex rot = unit_phase(p.phase / 2.0);
  AVector z;
  std::size_t m = 0;
  for (std::size_t j = 0; j < 4; ++j) {
    if (static_cast<int>(j) == p.zero_index) continue;
    const double sign = ((p.root_signs >> m) & 1U) ? -1.0 : 1.0;
    z[j] = sign * rot * pattern[m];
    ++m;
  }
  return z;
}

struct CanonicalMove {
  enum class Type { transposition, phase };
  Type type = Type::phase;
  int index = 0;         ///< transposition: U_index
  Complex factor = 1.0;  ///< phase: global factor applied

  std::string describe() const {
    std::ostringstream os;
    if (type == Type::transposition) {
      os << "U" << index;
    } else {
      os << "phase(" << std::arg(factor) << ")";
    }
    return os.str();
  }
};

struct CanonicalForm {
  AVector z;
  std::vector<CanonicalMove> transcript;
  bool is_Lprime = false;
  double distance = 0.0;  ///< distance to the reached target
};

/// Reduces a maximizer to |L> or |L'>: move the vanishing coordinate to slot
/// 3, order the squares counter-clockwise, make z0 real positive, then
/// resolve the four sign cases of (z1, z2) = (+-w, +-w^2)/sqrt(3).
inline CanonicalForm canonicalize_maximizer(const AVector& input) {
  const double target = std::pow(3.0, -9.0);
  const double norm_res = std::abs(input.norm() * input.norm() - 1.0);
  const double det_res = std::abs(std::abs(det_A(input)) - target) / target;
  if (norm_res > 1e-9 || det_res > 1e-6) {
    std::ostringstream msg;
    msg << "canonicalize_maximizer: not a maximizer (norm residual " << norm_res << ", relative |Det| residual "
        << det_res << ")";
    throw std::invalid_argument(msg.str());
  }
  CanonicalForm out;
  AVector z = input;
  auto transpose = [&](int i) {
    z = apply_transposition(i, z);
    out.transcript.push_back({CanonicalMove::Type::transposition, i, 1.0});
  };
  auto rephase = [&](Complex f) {
    z = z.scaled(f);
    out.transcript.push_back({CanonicalMove::Type::phase, 0, f});
  };

  int zero = 0;
  for (int j = 1; j < 4; ++j)
    if (std::abs(z[j]) < std::abs(z[zero])) zero = j;
  for (int i = zero; i < 3; ++i) transpose(i);

  const double turn = std::arg((z[1] * z[1]) / (z[0] * z[0]));
  if (std::abs(std::abs(turn) - 2.0 * kPi / 3.0) > 1e-4) {
    std::ostringstream msg;
    msg << "canonicalize_maximizer: squares do not form an equilateral triangle (angle " << turn << ")";
    throw std::invalid_argument(msg.str());
  }
  if (turn < 0.0) transpose(1);

  if (std::abs(std::arg(z[0])) > 1e-15) rephase(std::polar(1.0, -std::arg(z[0])));

  const Complex w = omega();
  const double s = 1.0 / std::sqrt(3.0);
  const bool plus1 = (z[1] / (s * w)).real() > 0.0;
  const bool plus2 = (z[2] / (s * w * w)).real() > 0.0;
  if (plus1 && !plus2) {
    // Already |L>.
  } else if (!plus1 && plus2) {
    transpose(1);
  } else if (plus1 && plus2) {
    rephase(std::conj(w));
    transpose(0);
    transpose(1);
  } else {
    rephase(w);
    transpose(1);
    transpose(0);
  }

  const double to_l = z.distance(state_L());
  const double to_lp = z.distance(state_Lprime());
  out.is_Lprime = to_lp < to_l;
  out.distance = std::min(to_l, to_lp);
  out.z = z;
  if (out.distance > 1e-5) {
    std::ostringstream msg;
    msg << "canonicalize_maximizer: reduction ended " << out.distance << " away from |L> and |L'>";
    throw std::invalid_argument(msg.str());
  }
  return out;
}

struct LuSearchResult {
  double fidelity = 0.0;  ///< |<phi, g psi>|
  LocalOperator witness = LocalOperator::identity();
  int restarts = 0;
};

namespace detail {

inline std::array<Mat2, 4> su2_chart(const Eigen::VectorXd& p) {
  std::array<Mat2, 4> m;
  for (int s = 0; s < 4; ++s) {
    const double a = p[3 * s], b = p[3 * s + 1], c = p[3 * s + 2];
    const Mat2 h{{Complex(c), Complex(a, -b), Complex(a, b), Complex(-c)}};
    m[static_cast<std::size_t>(s)] = expm_traceless(kI * h);
  }
  return m;
}

inline double overlap_sq(const Eigen::VectorXd& p, const QuartState& psi, const QuartState& phi) {
  QuartState v = psi;
  const auto m = su2_chart(p);
  for (int s = 0; s < 4; ++s) v = apply_slot(m[static_cast<std::size_t>(s)], s, v);
  return std::norm(phi.inner(v));
}

}  // namespace detail

/// Maximizes |<phi, (U1 (x) U2 (x) U3 (x) U4) psi>| over SU(2)^4 using the
/// chart U = exp(i (a X + b Y + c Z)) per slot. Restart 0 starts at the
/// identity; restart i > 0 draws from derive_seed(seed, i).
inline LuSearchResult lu_search(const QuartState& psi, const QuartState& phi, int restarts, std::uint64_t seed,
                                unsigned threads = 1) {
  if (!psi.is_normalized() || !phi.is_normalized()) throw std::invalid_argument("lu_search: inputs must be normalized");
  if (restarts < 1) throw std::invalid_argument("lu_search: restarts must be >= 1");

  auto objective = [&](const Eigen::VectorXd& p, Eigen::VectorXd& g) {
    constexpr double h = 1e-6;
    Eigen::VectorXd q = p;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      q[i] = p[i] + h;
      const double up = detail::overlap_sq(q, psi, phi);
      q[i] = p[i] - h;
      const double down = detail::overlap_sq(q, psi, phi);
      q[i] = p[i];
      g[i] = -(up - down) / (2.0 * h);
    }
    return -detail::overlap_sq(p, psi, phi);
  };

  std::vector<BfgsResult> results(static_cast<std::size_t>(restarts));
  parallel_for(results.size(), threads, [&](std::size_t i) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(12);
    if (i > 0) {
      Rng rng = make_rng(seed, i);
      std::normal_distribution<double> n(0.0, 1.0);
      for (Eigen::Index k = 0; k < 12; ++k) x[k] = n(rng);
    }
    BfgsOptions opt;
    opt.gradient_tol = 1e-10;
    opt.max_iterations = 500;
    results[i] = bfgs_minimize(objective, x, opt);
  });

  LuSearchResult out;
  out.restarts = restarts;
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i)
    if (results[i].value < results[best].value) best = i;
  out.fidelity = std::min(1.0, std::sqrt(std::max(0.0, -results[best].value)));
  out.witness = LocalOperator::unitary(detail::su2_chart(results[best].x), 1e-10);
  return out;
}

}  // namespace hyperdet
