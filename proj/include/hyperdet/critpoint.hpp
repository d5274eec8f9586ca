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

// First-order conditions for maximizing |f|^2, f(z) = prod_{j<k} (z_j - z_k),
// on the set sum_j |z_j| = 1. With z_j = r_j e^{i theta_j} and
//
//   w_j = e^{i theta_j} sum_{k != j} 1 / (z_j - z_k),
//
// one has (1/f) df/dr_j = w_j and (1/f) df/dtheta_j = i r_j w_j, so a
// constrained critical point has all defined w_j real and equal.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hyperdet/common.hpp"
#include "hyperdet/qstate.hpp"

namespace hyperdet {

inline Complex vandermonde_f(const AVector& v) {
  Complex p = 1.0;
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = j + 1; k < 4; ++k) p *= v[j] - v[k];
  return p;
}

/// Throws DomainError naming the first pair of coincident points.
inline void require_distinct(std::span<const Complex> z) {
  double scale = 0.0;
  for (const auto& c : z) scale = std::max(scale, std::abs(c));
  const double tol = 1e-15 * std::max(scale, 1e-300);
  for (std::size_t j = 0; j < z.size(); ++j) {
    for (std::size_t k = j + 1; k < z.size(); ++k) {
      if (std::abs(z[j] - z[k]) <= tol) {
        std::ostringstream msg;
        msg << "coincident coordinates z_" << j << " and z_" << k;
        throw DomainError(msg.str());
      }
    }
  }
}

/// w_j for every point with radius above zero_tol; empty where undefined.
inline std::vector<std::optional<Complex>> w_values(std::span<const Complex> z, double zero_tol = 0.0) {
  require_distinct(z);
  std::vector<std::optional<Complex>> w(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    const double r = std::abs(z[j]);
    if (r <= zero_tol) continue;
    Complex s{};
    for (std::size_t k = 0; k < z.size(); ++k)
      if (k != j) s += 1.0 / (z[j] - z[k]);
    w[j] = (z[j] / r) * s;
  }
  return w;
}

struct WVector {
  std::array<std::optional<Complex>, 4> w;

  bool defined(std::size_t j) const { return w[j].has_value(); }
  Complex operator[](std::size_t j) const { return w[j].value(); }
};

inline WVector w_vector(const AVector& v) {
  const auto vals = w_values(v.z);
  WVector out;
  std::copy(vals.begin(), vals.end(), out.w.begin());
  return out;
}

/// Closed forms of w_j on the phase pattern (theta, pi - theta, pi + theta,
/// -theta), written with u = e^{2 i theta}.
inline std::array<Complex, 4> w_theta_form(const std::array<double, 4>& r, double theta) {
  const Complex u = unit_phase(2.0 * theta);
  const Complex ui = 1.0 / u;
  const std::array<Complex, 10> denom{
      Complex(r[0] + r[2]), r[0] + r[1] * ui, r[0] - r[3] * ui,  //
      Complex(r[1] + r[3]), r[1] + r[0] * u,  r[1] - r[2] * u,   //
      r[2] - r[1] * ui,     r[2] + r[3] * ui,                    //
      r[3] - r[0] * u,      r[3] + r[2] * u};
  for (const auto& d : denom)
    if (std::abs(d) == 0.0) throw DomainError("w_theta_form: vanishing denominator");
  return {1.0 / denom[0] + 1.0 / denom[1] + 1.0 / denom[2],
          1.0 / denom[3] + 1.0 / denom[4] + 1.0 / denom[5],
          1.0 / denom[0] + 1.0 / denom[6] + 1.0 / denom[7],
          1.0 / denom[3] + 1.0 / denom[8] + 1.0 / denom[9]};
}

/// The five members of the chain
///   4 r0 r1 r2 r3 cos 2theta = r2 (r1 - r3)(r0^2 - r1 r3) = r3 (r0 - r2)(r1^2 - r0 r2)
///                            = r0 (r1 - r3)(r1 r3 - r2^2) = r1 (r0 - r2)(r0 r2 - r3^2)
/// that holds when every w_j is real and 0 < theta.
inline std::array<double, 5> real_w_chain(const std::array<double, 4>& r, double theta) {
  return {4.0 * r[0] * r[1] * r[2] * r[3] * std::cos(2.0 * theta),
          r[2] * (r[1] - r[3]) * (r[0] * r[0] - r[1] * r[3]),
          r[3] * (r[0] - r[2]) * (r[1] * r[1] - r[0] * r[2]),
          r[0] * (r[1] - r[3]) * (r[1] * r[3] - r[2] * r[2]),
          r[1] * (r[0] - r[2]) * (r[0] * r[2] - r[3] * r[3])};
}

/// |sum_j e^{i theta_j}|.
inline double phase_sum_residual(const std::array<double, 4>& theta) {
  Complex s{};
  for (double t : theta) s += unit_phase(t);
  return std::abs(s);
}

enum class Classification { interior, one_zero, invalid };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::interior: return "interior";
    case Classification::one_zero: return "one-zero";
    case Classification::invalid: return "invalid";
  }
  return "invalid";
}

struct CriticalityReport {
  double max_imag = 0.0;          ///< max |Im w_j| over defined j
  double max_pairwise_gap = 0.0;  ///< max |w_j - w_k| over defined j, k
  /// |sum_j e^{i theta_j}| for interior points; 0 when one radius vanishes.
  double phase_sum_residual = 0.0;
  /// |sum_j (w - 1/r_j) e^{-i theta_j}| with w the mean of Re w_j, one-zero
  /// points only; 0 for interior points.
  double boundary_residual = 0.0;
  Classification classification = Classification::invalid;

  double worst() const {
    return std::max({max_imag, max_pairwise_gap, phase_sum_residual, boundary_residual});
  }
  bool certified(double tol) const { return classification != Classification::invalid && worst() < tol; }
};

/// Generalized first-order residual for any number of points: max over
/// defined w_j of |Im w_j| and |w_j - w_k|. Infinite when fewer than one w
/// is defined or two points coincide.
inline double kkt_residual(std::span<const Complex> z, double zero_tol = kZeroRadius) {
  std::vector<std::optional<Complex>> w;
  try {
    w = w_values(z, zero_tol);
  } catch (const DomainError&) {
    return std::numeric_limits<double>::infinity();
  }
  double res = 0.0;
  bool any = false;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (!w[j]) continue;
    any = true;
    res = std::max(res, std::abs(w[j]->imag()));
    for (std::size_t k = j + 1; k < w.size(); ++k)
      if (w[k]) res = std::max(res, std::abs(*w[j] - *w[k]));
  }
  return any ? res : std::numeric_limits<double>::infinity();
}

/// Requires sum_j |z_j| = 1 to 1e-9.
inline CriticalityReport criticality_residual(const AVector& v) {
  if (std::abs(v.l1_radius() - 1.0) > 1e-9) {
    throw std::invalid_argument("criticality_residual: point is off the constraint sum |z_j| = 1");
  }
  constexpr double inf = std::numeric_limits<double>::infinity();
  CriticalityReport rep;
  const PolarA p = to_polar(v);
  const auto zeros = std::count_if(p.r.begin(), p.r.end(), [](double r) { return r <= kZeroRadius; });
  std::vector<std::optional<Complex>> w;
  try {
    w = w_values(v.z, kZeroRadius);
  } catch (const DomainError&) {
    rep.max_imag = rep.max_pairwise_gap = rep.phase_sum_residual = rep.boundary_residual = inf;
    return rep;
  }
  if (zeros >= 2) {
    rep.max_imag = rep.max_pairwise_gap = rep.phase_sum_residual = rep.boundary_residual = inf;
    return rep;
  }
  rep.classification = zeros == 0 ? Classification::interior : Classification::one_zero;

  double mean_re = 0.0;
  int defined = 0;
  for (std::size_t j = 0; j < 4; ++j) {
    if (!w[j]) continue;
    rep.max_imag = std::max(rep.max_imag, std::abs(w[j]->imag()));
    for (std::size_t k = j + 1; k < 4; ++k)
      if (w[k]) rep.max_pairwise_gap = std::max(rep.max_pairwise_gap, std::abs(*w[j] - *w[k]));
    mean_re += w[j]->real();
    ++defined;
  }
  mean_re /= defined;

  if (rep.classification == Classification::interior) {
    rep.phase_sum_residual = phase_sum_residual(p.theta);
  } else {
    Complex s{};
    for (std::size_t j = 0; j < 4; ++j)
      if (w[j]) s += (mean_re - 1.0 / p.r[j]) * unit_phase(-p.theta[j]);
    rep.boundary_residual = std::abs(s);
  }
  return rep;
}

}  // namespace hyperdet
