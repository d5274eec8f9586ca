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

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include "hyperdet/common.hpp"

namespace hyperdet {

/// Amplitude index of the computational basis ket |b1 b2 b3 b4>. Qubit 1 is
/// the most significant bit.
constexpr std::size_t amp_index(int b1, int b2, int b3, int b4) {
  return static_cast<std::size_t>(8 * b1 + 4 * b2 + 2 * b3 + b4);
}

/// Bit of qubit `slot` (0-based, slot 0 is qubit 1) inside an amplitude index.
constexpr int slot_bit(std::size_t index, int slot) {
  return static_cast<int>((index >> (3 - slot)) & 1U);
}

/// A four-qubit state vector: 16 complex amplitudes in b1b2b3b4 order.
class QuartState {
 public:
  using Amplitudes = std::array<Complex, 16>;

  QuartState() { amp_.fill(Complex{}); }

  explicit QuartState(const Amplitudes& amp) : amp_(amp) {
    for (const auto& a : amp_) {
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw std::invalid_argument("QuartState: non-finite amplitude");
      }
    }
  }

  static QuartState ket(std::size_t index) {
    if (index >= 16) throw std::out_of_range("QuartState::ket: index >= 16");
    QuartState s;
    s.amp_[index] = 1.0;
    return s;
  }

  /// Tensor product q1 (x) q2 (x) q3 (x) q4 of single-qubit vectors.
  static QuartState product(const std::array<std::array<Complex, 2>, 4>& qubits) {
    Amplitudes amp{};
    for (std::size_t i = 0; i < 16; ++i) {
      Complex a = 1.0;
      for (int s = 0; s < 4; ++s) a *= qubits[s][slot_bit(i, s)];
      amp[i] = a;
    }
    return QuartState(amp);
  }

  const Complex& operator[](std::size_t i) const { return amp_[i]; }
  Complex& operator[](std::size_t i) { return amp_[i]; }
  const Amplitudes& amplitudes() const { return amp_; }
  std::span<const Complex, 16> span() const { return amp_; }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amp_) s += std::norm(a);
    return std::sqrt(s);
  }

  bool is_normalized(double tol = 1e-12) const { return std::abs(norm() - 1.0) < tol; }

  QuartState normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::domain_error("QuartState::normalized: zero vector");
    return *this * Complex(1.0 / n);
  }

  /// <this|other>, antilinear in the first argument.
  Complex inner(const QuartState& other) const {
    Complex s{};
    for (std::size_t i = 0; i < 16; ++i) s += std::conj(amp_[i]) * other.amp_[i];
    return s;
  }

  QuartState& operator+=(const QuartState& o) {
    for (std::size_t i = 0; i < 16; ++i) amp_[i] += o.amp_[i];
    return *this;
  }
  QuartState& operator-=(const QuartState& o) {
    for (std::size_t i = 0; i < 16; ++i) amp_[i] -= o.amp_[i];
    return *this;
  }
  QuartState& operator*=(Complex c) {
    for (auto& a : amp_) a *= c;
    return *this;
  }
  friend QuartState operator+(QuartState a, const QuartState& b) { return a += b; }
  friend QuartState operator-(QuartState a, const QuartState& b) { return a -= b; }
  friend QuartState operator*(QuartState a, Complex c) { return a *= c; }
  friend QuartState operator*(Complex c, QuartState a) { return a *= c; }

  /// Qubit slots permuted: qubit `perm[s]` of the input becomes qubit `s`.
  QuartState permuted(const std::array<int, 4>& perm) const {
    QuartState out;
    for (std::size_t i = 0; i < 16; ++i) {
      std::size_t src = 0;
      for (int s = 0; s < 4; ++s) src |= static_cast<std::size_t>(slot_bit(i, s)) << (3 - perm[s]);
      out.amp_[i] = amp_[src];
    }
    return out;
  }

 private:
  Amplitudes amp_;
};

/// Coordinates (z0, z1, z2, z3) of a vector of the subspace A in the u-basis.
struct AVector {
  std::array<Complex, 4> z{};

  Complex& operator[](std::size_t j) { return z[j]; }
  const Complex& operator[](std::size_t j) const { return z[j]; }

  double norm() const {
    double s = 0.0;
    for (const auto& c : z) s += std::norm(c);
    return std::sqrt(s);
  }
  /// Sum of moduli, the L1 radius used by the constraint sum |z_j| = 1.
  double l1_radius() const {
    double s = 0.0;
    for (const auto& c : z) s += std::abs(c);
    return s;
  }
  AVector scaled(Complex c) const {
    AVector out = *this;
    for (auto& v : out.z) v *= c;
    return out;
  }
  double distance(const AVector& o) const {
    double s = 0.0;
    for (std::size_t j = 0; j < 4; ++j) s += std::norm(z[j] - o.z[j]);
    return std::sqrt(s);
  }
};

/// Polar coordinates z_j = r_j e^{i theta_j}.
struct PolarA {
  std::array<double, 4> r{};
  std::array<double, 4> theta{};
};

inline PolarA to_polar(const AVector& v) {
  PolarA p;
  for (std::size_t j = 0; j < 4; ++j) {
    p.r[j] = std::abs(v[j]);
    p.theta[j] = p.r[j] > 0.0 ? std::arg(v[j]) : 0.0;
  }
  return p;
}

inline AVector from_polar(const PolarA& p) {
  AVector v;
  for (std::size_t j = 0; j < 4; ++j) {
    if (p.r[j] < 0.0) throw std::invalid_argument("from_polar: negative radius");
    v[j] = std::polar(p.r[j], p.theta[j]);
  }
  return v;
}

namespace detail {

struct USupport {
  std::array<std::size_t, 4> index;
  std::array<int, 4> sign;
};

inline constexpr std::array<USupport, 4> kUBasis{{
    {{amp_index(0, 0, 0, 0), amp_index(0, 0, 1, 1), amp_index(1, 1, 0, 0), amp_index(1, 1, 1, 1)},
     {1, 1, 1, 1}},
    {{amp_index(0, 0, 0, 0), amp_index(0, 0, 1, 1), amp_index(1, 1, 0, 0), amp_index(1, 1, 1, 1)},
     {1, -1, -1, 1}},
    {{amp_index(0, 1, 0, 1), amp_index(0, 1, 1, 0), amp_index(1, 0, 0, 1), amp_index(1, 0, 1, 0)},
     {1, 1, 1, 1}},
    {{amp_index(0, 1, 0, 1), amp_index(0, 1, 1, 0), amp_index(1, 0, 0, 1), amp_index(1, 0, 1, 0)},
     {1, -1, -1, 1}},
}};

}  // namespace detail

/// The orthonormal basis vector u_j of A; every amplitude is 0 or +-1/2.
inline QuartState basis_u(int j) {
  if (j < 0 || j > 3) throw std::out_of_range("basis_u: index must be in 0..3");
  QuartState s;
  const auto& b = detail::kUBasis[static_cast<std::size_t>(j)];
  for (std::size_t k = 0; k < 4; ++k) s[b.index[k]] = 0.5 * b.sign[k];
  return s;
}

inline QuartState embed_A(const AVector& v) {
  QuartState s;
  for (std::size_t j = 0; j < 4; ++j) {
    const auto& b = detail::kUBasis[j];
    for (std::size_t k = 0; k < 4; ++k) s[b.index[k]] += 0.5 * b.sign[k] * v[j];
  }
  return s;
}

struct Projection {
  AVector z;
  double residual = 0.0;  ///< ||psi - embed_A(z)||
};

inline Projection project_A(const QuartState& psi) {
  Projection p;
  for (std::size_t j = 0; j < 4; ++j) {
    const auto& b = detail::kUBasis[j];
    Complex c{};
    for (std::size_t k = 0; k < 4; ++k) c += 0.5 * b.sign[k] * psi[b.index[k]];
    p.z[j] = c;
  }
  p.residual = (psi - embed_A(p.z)).norm();
  return p;
}

/// omega = e^{i pi / 3}.
inline Complex omega() { return unit_phase(kPi / 3.0); }

/// |L> = (u0 + omega u1 + conj(omega) u2) / sqrt(3).
inline AVector state_L() {
  const double s = 1.0 / std::sqrt(3.0);
  const Complex w = omega();
  return AVector{{Complex(s), s * w, s * std::conj(w), Complex{}}};
}

/// |L'>: omega replaced by omega^2.
inline AVector state_Lprime() {
  const double s = 1.0 / std::sqrt(3.0);
  const Complex w2 = omega() * omega();
  return AVector{{Complex(s), s * w2, s * std::conj(w2), Complex{}}};
}

inline AVector square_map(const AVector& v) {
  AVector out;
  for (std::size_t j = 0; j < 4; ++j) out[j] = v[j] * v[j];
  return out;
}

}  // namespace hyperdet
