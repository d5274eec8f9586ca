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

// Four-qubit hyperdeterminant. On the subspace A it is the closed product
// over squared coordinates; on all of H it is obtained by Schlafli's
// construction: slice psi along qubit 4 into two 2x2x2 tensors T0, T1, form
// the binary quartic q(x, y) = Det3(x T0 + y T1) and take its discriminant.
// A single calibration constant matches the two normalizations.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "hyperdet/common.hpp"
#include "hyperdet/qstate.hpp"
#include "hyperdet/random.hpp"

namespace hyperdet {

/// 2x2x2 tensor, entry (i, j, k) stored at 4i + 2j + k.
struct CubeTensor {
  std::array<Complex, 8> t{};

  Complex& at(int i, int j, int k) { return t[static_cast<std::size_t>(4 * i + 2 * j + k)]; }
  const Complex& at(int i, int j, int k) const { return t[static_cast<std::size_t>(4 * i + 2 * j + k)]; }
};

/// q(x, y) = sum_k c[k] x^k y^(4-k); c[4] is the leading coefficient.
struct BinaryQuartic {
  std::array<Complex, 5> c{};

  Complex operator()(Complex x, Complex y) const {
    Complex s{};
    for (int k = 0; k < 5; ++k) s += c[k] * std::pow(x, k) * std::pow(y, 4 - k);
    return s;
  }
  double max_abs() const {
    double m = 0.0;
    for (const auto& v : c) m = std::max(m, std::abs(v));
    return m;
  }
};

/// Det restricted to A: prod_{j<k} (z_j^2 - z_k^2)^2.
inline Complex det_A(const AVector& v) {
  Complex p = 1.0;
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = j + 1; k < 4; ++k) {
      const Complex d = v[j] * v[j] - v[k] * v[k];
      p *= d * d;
    }
  }
  return p;
}

/// Cayley's degree-4 hyperdeterminant written over any commutative ring
/// type, so the same form can be evaluated on numbers or on polynomials.
template <class T>
T cayley_form(const std::array<T, 8>& a) {
  const T& a000 = a[0];
  const T& a001 = a[1];
  const T& a010 = a[2];
  const T& a011 = a[3];
  const T& a100 = a[4];
  const T& a101 = a[5];
  const T& a110 = a[6];
  const T& a111 = a[7];
  T squares = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 + a010 * a010 * a101 * a101 +
              a100 * a100 * a011 * a011;
  T cross = a000 * a001 * a110 * a111 + a000 * a010 * a101 * a111 + a000 * a100 * a011 * a111 +
            a001 * a010 * a101 * a110 + a001 * a100 * a011 * a110 + a010 * a100 * a011 * a101;
  T quad = a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111;
  return squares - cross * 2.0 + quad * 4.0;
}

inline Complex cayley_det3(const CubeTensor& t) { return cayley_form(t.t); }

/// Slice of psi with qubit 4 fixed to b4.
inline CubeTensor slice_q4(const QuartState& psi, int b4) {
  CubeTensor t;
  for (std::size_t i = 0; i < 8; ++i) t.t[i] = psi[2 * i + static_cast<std::size_t>(b4)];
  return t;
}

/// Coefficients of Det3(x T0 + y T1), recovered by evaluating at the five
/// fifth roots of unity (x, 1) and inverting the discrete Fourier transform.
/// Loses digits on large-norm states; kept as an independent cross-check.
inline BinaryQuartic pencil_quartic_interpolated(const QuartState& psi) {
  const CubeTensor t0 = slice_q4(psi, 0);
  const CubeTensor t1 = slice_q4(psi, 1);
  std::array<Complex, 5> values;
  std::array<Complex, 5> roots;
  for (int m = 0; m < 5; ++m) {
    roots[m] = unit_phase(2.0 * kPi * m / 5.0);
    CubeTensor mix;
    for (std::size_t i = 0; i < 8; ++i) mix.t[i] = roots[m] * t0.t[i] + t1.t[i];
    values[m] = cayley_det3(mix);
  }
  BinaryQuartic q;
  for (int k = 0; k < 5; ++k) {
    Complex s{};
    for (int m = 0; m < 5; ++m) s += values[m] * std::conj(roots[(m * k) % 5]);
    q.c[k] = s / 5.0;
  }
  return q;
}

namespace detail {

/// Polynomial in x truncated at degree 4, enough to carry Det3(x T0 + T1).
struct QuarticSeries {
  std::array<Complex, 5> c{};

  friend QuarticSeries operator+(QuarticSeries a, const QuarticSeries& b) {
    for (int k = 0; k < 5; ++k) a.c[k] += b.c[k];
    return a;
  }
  friend QuarticSeries operator-(QuarticSeries a, const QuarticSeries& b) {
    for (int k = 0; k < 5; ++k) a.c[k] -= b.c[k];
    return a;
  }
  friend QuarticSeries operator*(const QuarticSeries& a, const QuarticSeries& b) {
    QuarticSeries r;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; i + j < 5; ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
  }
  friend QuarticSeries operator*(QuarticSeries a, double s) {
    for (auto& v : a.c) v *= s;
    return a;
  }
};

}  // namespace detail

/// Coefficients of Det3(x T0 + y T1), by expanding the Cayley form over
/// polynomials in x.
inline BinaryQuartic pencil_quartic(const QuartState& psi) {
  std::array<detail::QuarticSeries, 8> entries;
  for (std::size_t i = 0; i < 8; ++i) {
    entries[i].c[0] = psi[2 * i + 1];
    entries[i].c[1] = psi[2 * i];
  }
  BinaryQuartic q;
  q.c = cayley_form(entries).c;
  return q;
}

namespace detail {

template <std::size_t N>
Complex lu_determinant(std::array<std::array<Complex, N>, N> m) {
  Complex det = 1.0;
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < N; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    if (m[pivot][col] == Complex{}) return Complex{};
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < N; ++r) {
      const Complex f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < N; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

}  // namespace detail

/// Discriminant through the classical invariants I and J:
/// disc = (4 I^3 - J^2) / 27. Valid for every quartic including c4 = 0.
inline Complex quartic_disc_closed_form(const BinaryQuartic& q) {
  const Complex a = q.c[4], b = q.c[3], c = q.c[2], d = q.c[1], e = q.c[0];
  const Complex inv_i = 12.0 * a * e - 3.0 * b * d + c * c;
  const Complex inv_j =
      72.0 * a * c * e + 9.0 * b * c * d - 27.0 * a * d * d - 27.0 * e * b * b - 2.0 * c * c * c;
  return (4.0 * inv_i * inv_i * inv_i - inv_j * inv_j) / 27.0;
}

/// Res(q(x,1), q'(x,1)) / c4 from the 7x7 Sylvester matrix. Requires c4 != 0.
inline Complex quartic_disc_resultant(const BinaryQuartic& q) {
  if (q.c[4] == Complex{}) throw DomainError("quartic_disc_resultant: leading coefficient is zero");
  // Coefficients from the highest degree down.
  const std::array<Complex, 5> p{q.c[4], q.c[3], q.c[2], q.c[1], q.c[0]};
  const std::array<Complex, 4> dp{4.0 * q.c[4], 3.0 * q.c[3], 2.0 * q.c[2], q.c[1]};
  std::array<std::array<Complex, 7>, 7> s{};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t k = 0; k < 5; ++k) s[r][r + k] = p[k];
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t k = 0; k < 4; ++k) s[3 + r][r + k] = dp[k];
  return detail::lu_determinant(s) / q.c[4];
}

/// Resultant route when the leading coefficient is well away from zero,
/// closed form otherwise. The zero quartic has discriminant 0.
inline Complex quartic_disc(const BinaryQuartic& q) {
  const double scale = q.max_abs();
  if (scale == 0.0) return Complex{};
  if (std::abs(q.c[4]) <= 1e-6 * scale) return quartic_disc_closed_form(q);
  return quartic_disc_resultant(q);
}

struct Calibration {
  Complex kappa;
  double max_relative_spread = 0.0;  ///< worst ratio deviation over the check points
  int check_points = 0;
};

namespace detail {

inline Complex schlafli_ratio(const AVector& z) {
  const Complex denom = quartic_disc(pencil_quartic(embed_A(z)));
  if (std::abs(denom) < 1e-30) throw std::runtime_error("calibrate: degenerate probe");
  return det_A(z) / denom;
}

inline Calibration run_calibration() {
  Calibration cal;
  cal.kappa = schlafli_ratio(AVector{{1.0, 2.0, 3.0, 4.0}});
  Rng rng = make_rng(0x5ca1ab1eULL, 0);
  while (cal.check_points < 50) {
    AVector z;
    for (auto& c : z.z) c = random_normal_complex(rng);
    if (std::abs(det_A(z)) < 1e-12) continue;
    const Complex ratio = schlafli_ratio(z);
    cal.max_relative_spread = std::max(cal.max_relative_spread, std::abs(ratio - cal.kappa) / std::abs(cal.kappa));
    ++cal.check_points;
  }
  if (!(cal.max_relative_spread < 1e-9)) {
    throw std::runtime_error("calibrate: Schlafli ratio is not constant on A");
  }
  return cal;
}

}  // namespace detail

/// Calibration between Schlafli's discriminant and Det|_A, computed once.
inline const Calibration& calibration() {
  static const Calibration cal = detail::run_calibration();
  return cal;
}

inline Complex calibrate() { return calibration().kappa; }

/// The hyperdeterminant of an arbitrary four-qubit vector, normalized so
/// that det4(embed_A(z)) == det_A(z).
inline Complex det4(const QuartState& psi) { return calibrate() * quartic_disc(pencil_quartic(psi)); }

}  // namespace hyperdet
