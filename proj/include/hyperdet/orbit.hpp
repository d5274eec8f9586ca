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

// Local group actions on four qubits: SL(2,C)^4, SU(2)^4 and the Lie algebra
// sl(2)^4, the orbit tangent space, and the Kempf-Ness checks (a vector of A
// is orthogonal to its tangent space, hence of minimal norm on its orbit).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "hyperdet/common.hpp"
#include "hyperdet/qstate.hpp"
#include "hyperdet/random.hpp"

namespace hyperdet {

/// Row-major complex 2x2 matrix.
struct Mat2 {
  std::array<Complex, 4> a{};

  Complex& operator()(int i, int j) { return a[static_cast<std::size_t>(2 * i + j)]; }
  const Complex& operator()(int i, int j) const { return a[static_cast<std::size_t>(2 * i + j)]; }

  static Mat2 identity() { return Mat2{{1.0, 0.0, 0.0, 1.0}}; }
  static Mat2 diag(Complex d0, Complex d1) { return Mat2{{d0, 0.0, 0.0, d1}}; }

  Complex det() const { return a[0] * a[3] - a[1] * a[2]; }
  Complex trace() const { return a[0] + a[3]; }
  Mat2 adjoint() const { return Mat2{{std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
    return r;
  }
  friend Mat2 operator*(Complex s, Mat2 x) {
    for (auto& v : x.a) v *= s;
    return x;
  }
  friend Mat2 operator+(Mat2 x, const Mat2& y) {
    for (std::size_t i = 0; i < 4; ++i) x.a[i] += y.a[i];
    return x;
  }
  double distance(const Mat2& o) const {
    double s = 0.0;
    for (std::size_t i = 0; i < 4; ++i) s += std::norm(a[i] - o.a[i]);
    return std::sqrt(s);
  }
  bool is_unitary(double tol = 1e-12) const { return ((*this) * adjoint()).distance(identity()) < tol; }
};

enum class OperatorKind { unitary, determinant_one, lie_algebra_generator };

/// Four 2x2 factors acting slot-wise. A Lie algebra generator carries its
/// traceless matrix in one slot and acts as X (x) I (x) I (x) I, etc.
class LocalOperator {
 public:
  static LocalOperator identity() {
    LocalOperator g;
    g.kind_ = OperatorKind::unitary;
    g.m_.fill(Mat2::identity());
    return g;
  }

  static LocalOperator unitary(const std::array<Mat2, 4>& m, double tol = 1e-12) {
    for (const auto& f : m)
      if (!f.is_unitary(tol)) throw std::invalid_argument("LocalOperator::unitary: factor is not unitary");
    LocalOperator g;
    g.m_ = m;
    g.kind_ = OperatorKind::unitary;
    return g;
  }

  static LocalOperator determinant_one(const std::array<Mat2, 4>& m, double tol = 1e-12) {
    for (const auto& f : m)
      if (std::abs(f.det() - 1.0) >= tol)
        throw std::invalid_argument("LocalOperator::determinant_one: factor determinant is not 1");
    LocalOperator g;
    g.m_ = m;
    g.kind_ = OperatorKind::determinant_one;
    return g;
  }

  static LocalOperator generator(int slot, const Mat2& x) {
    if (slot < 0 || slot > 3) throw std::out_of_range("LocalOperator::generator: slot must be in 0..3");
    if (std::abs(x.trace()) > 1e-12) throw std::invalid_argument("LocalOperator::generator: matrix is not traceless");
    LocalOperator g;
    g.m_.fill(Mat2{});
    g.m_[static_cast<std::size_t>(slot)] = x;
    g.kind_ = OperatorKind::lie_algebra_generator;
    g.slot_ = slot;
    return g;
  }

  OperatorKind kind() const { return kind_; }
  int slot() const { return slot_; }
  const Mat2& factor(int s) const { return m_[static_cast<std::size_t>(s)]; }
  const std::array<Mat2, 4>& factors() const { return m_; }

 private:
  LocalOperator() = default;
  std::array<Mat2, 4> m_{};
  OperatorKind kind_ = OperatorKind::unitary;
  int slot_ = -1;
};

/// Applies m to qubit `slot` (0 = qubit 1).
inline QuartState apply_slot(const Mat2& m, int slot, const QuartState& psi) {
  QuartState out;
  const std::size_t bit = std::size_t{1} << (3 - slot);
  for (std::size_t i = 0; i < 16; ++i) {
    if (i & bit) continue;
    const Complex a0 = psi[i], a1 = psi[i | bit];
    out[i] = m(0, 0) * a0 + m(0, 1) * a1;
    out[i | bit] = m(1, 0) * a0 + m(1, 1) * a1;
  }
  return out;
}

inline QuartState apply_local(const LocalOperator& g, const QuartState& psi) {
  if (g.kind() == OperatorKind::lie_algebra_generator) {
    throw std::invalid_argument("apply_local: a Lie algebra generator is not a group element");
  }
  QuartState out = psi;
  for (int s = 0; s < 4; ++s) out = apply_slot(g.factor(s), s, out);
  return out;
}

/// X . psi for a generator X of sl(2)^4.
inline QuartState apply_generator(const LocalOperator& x, const QuartState& psi) {
  if (x.kind() != OperatorKind::lie_algebra_generator) {
    throw std::invalid_argument("apply_generator: operator is not a Lie algebra generator");
  }
  return apply_slot(x.factor(x.slot()), x.slot(), psi);
}

/// Raising, lowering and diagonal generator for each of the four slots.
inline std::array<LocalOperator, 12> sl2_basis() {
  const Mat2 raise{{0.0, 1.0, 0.0, 0.0}};
  const Mat2 lower{{0.0, 0.0, 1.0, 0.0}};
  const Mat2 diag = Mat2::diag(1.0, -1.0);
  return {LocalOperator::generator(0, raise), LocalOperator::generator(0, lower), LocalOperator::generator(0, diag),
          LocalOperator::generator(1, raise), LocalOperator::generator(1, lower), LocalOperator::generator(1, diag),
          LocalOperator::generator(2, raise), LocalOperator::generator(2, lower), LocalOperator::generator(2, diag),
          LocalOperator::generator(3, raise), LocalOperator::generator(3, lower), LocalOperator::generator(3, diag)};
}

/// exp(A) for traceless A, via A^2 = -det(A) I.
inline Mat2 expm_traceless(const Mat2& x) {
  const Complex mu = std::sqrt(-x.det());
  Complex c, s;
  if (std::abs(mu) < 1e-6) {
    const Complex mu2 = mu * mu;
    c = 1.0 + mu2 / 2.0 + mu2 * mu2 / 24.0;
    s = 1.0 + mu2 / 6.0 + mu2 * mu2 / 120.0;
  } else {
    c = std::cosh(mu);
    s = std::sinh(mu) / mu;
  }
  return c * Mat2::identity() + s * x;
}

struct TangentMap {
  std::array<QuartState, 12> rows;
  int rank = 0;
  double largest_sv = 0.0;
  double smallest_sv = 0.0;
};

/// Rows X_k . psi over sl2_basis(); rank counts singular values above
/// 1e-9 times the largest.
inline TangentMap tangent_map(const QuartState& psi) {
  TangentMap t;
  const auto basis = sl2_basis();
  Eigen::Matrix<Complex, 16, 12> m;
  for (std::size_t k = 0; k < 12; ++k) {
    t.rows[k] = apply_generator(basis[k], psi);
    for (std::size_t i = 0; i < 16; ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = t.rows[k][i];
  }
  const Eigen::JacobiSVD<Eigen::Matrix<Complex, 16, 12>> svd(m);
  const auto& sv = svd.singularValues();
  t.largest_sv = sv.maxCoeff();
  t.smallest_sv = sv.minCoeff();
  if (t.largest_sv > 0.0) {
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv[i] > 1e-9 * t.largest_sv) ++t.rank;
  }
  return t;
}

/// psi lies in the generic set: its SL orbit has full dimension 12.
inline bool is_generic(const QuartState& psi) { return tangent_map(psi).rank == 12; }

/// max_k |<psi, X_k psi>| over the 12 generators.
inline double kempf_ness_residual(const QuartState& psi) {
  double m = 0.0;
  for (const auto& x : sl2_basis()) m = std::max(m, std::abs(psi.inner(apply_generator(x, psi))));
  return m;
}

inline double kempf_ness_residual(const AVector& z) { return kempf_ness_residual(embed_A(z)); }

/// Random element of SL(2,C)^4: exp of a random traceless matrix per slot,
/// entries scaled by `scale`.
inline LocalOperator random_sl(Rng& rng, double scale) {
  std::array<Mat2, 4> m;
  for (auto& f : m) {
    const Complex d = random_normal_complex(rng);
    const Complex b = random_normal_complex(rng);
    const Complex c = random_normal_complex(rng);
    f = expm_traceless(Mat2{{scale * d, scale * b, scale * c, -scale * d}});
  }
  return LocalOperator::determinant_one(m, 1e-10);
}

/// Random element of SU(2)^4: exp(i (a X + b Y + c Z)) per slot.
inline LocalOperator random_su(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::array<Mat2, 4> m;
  for (auto& f : m) {
    const double a = n(rng), b = n(rng), c = n(rng);
    const Mat2 h{{Complex(c), Complex(a, -b), Complex(a, b), Complex(-c)}};
    f = expm_traceless(kI * h);
  }
  return LocalOperator::unitary(m, 1e-10);
}

enum class ProbeKind { determinant_one, unitary };

struct NormProbe {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  int samples = 0;
};

/// Extremes of ||g . z|| / ||z|| over sampled g. Determinant-one samples use
/// a per-sample entry scale from {0.1, 0.5, 1.0}; sample i draws from
/// derive_seed(seed, i).
inline NormProbe norm_min_probe(const AVector& z, int samples, std::uint64_t seed,
                                ProbeKind kind = ProbeKind::determinant_one) {
  if (samples <= 0) throw std::invalid_argument("norm_min_probe: samples must be positive");
  const QuartState psi = embed_A(z);
  const double base = psi.norm();
  if (base == 0.0) throw std::invalid_argument("norm_min_probe: zero vector");
  constexpr std::array<double, 3> scales{0.1, 0.5, 1.0};
  NormProbe p;
  p.samples = samples;
  p.min_ratio = std::numeric_limits<double>::infinity();
  p.max_ratio = 0.0;
  for (int i = 0; i < samples; ++i) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(i));
    const LocalOperator g = kind == ProbeKind::unitary ? random_su(rng) : random_sl(rng, scales[rng() % 3]);
    const double ratio = apply_local(g, psi).norm() / base;
    p.min_ratio = std::min(p.min_ratio, ratio);
    p.max_ratio = std::max(p.max_ratio, ratio);
  }
  return p;
}

}  // namespace hyperdet
