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

// Maximization of |V_n(z)| = prod_{j<k} |z_k - z_j| over complex points with
// sum_j |z_j| = 1. The constraint is built into the parametrization
// z_j = (s_j^2 / sum_k s_k^2) e^{i theta_j}, so every parameter vector is
// feasible and a vanishing radius is an ordinary interior point (s_j = 0).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hyperdet/common.hpp"
#include "hyperdet/critpoint.hpp"
#include "hyperdet/optimize.hpp"
#include "hyperdet/random.hpp"

namespace hyperdet {

struct VnConfig {
  std::vector<Complex> points;

  std::size_t n() const { return points.size(); }
  double l1_radius() const {
    double s = 0.0;
    for (const auto& p : points) s += std::abs(p);
    return s;
  }
  double constraint_residual() const { return std::abs(l1_radius() - 1.0); }
};

/// prod_{j<k} (z_k - z_j).
inline Complex vandermonde_n(std::span<const Complex> z) {
  if (z.size() < 2) throw std::invalid_argument("vandermonde_n: need at least two points");
  Complex p = 1.0;
  for (std::size_t j = 0; j < z.size(); ++j)
    for (std::size_t k = j + 1; k < z.size(); ++k) p *= z[k] - z[j];
  return p;
}

inline double log_abs_vandermonde(std::span<const Complex> z) {
  double s = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j)
    for (std::size_t k = j + 1; k < z.size(); ++k) s += std::log(std::abs(z[k] - z[j]));
  return s;
}

/// (n-1)^{-(n-1)^2/2}, evaluated in the log domain.
inline double lambda_n(int n) {
  if (n < 2) throw std::invalid_argument("lambda_n: n must be >= 2");
  const double m = n - 1.0;
  return std::exp(-0.5 * m * m * std::log(m));
}

/// Regular (n-1)-gon of radius 1/(n-1) plus the origin.
inline VnConfig candidate_config(int n) {
  if (n < 3) throw std::invalid_argument("candidate_config: n must be >= 3");
  VnConfig c;
  const double m = n - 1.0;
  for (int j = 0; j < n - 1; ++j) c.points.push_back(std::polar(1.0 / m, 2.0 * kPi * j / m));
  c.points.push_back(Complex{});
  return c;
}

/// |V_n| recomputed with 50 significant digits after rescaling the points
/// onto sum |z_j| = 1 exactly.
inline double certified_abs_vandermonde(std::span<const Complex> z) {
  using boost::multiprecision::cpp_bin_float_50;
  std::vector<cpp_bin_float_50> re, im;
  cpp_bin_float_50 total = 0;
  for (const auto& p : z) {
    re.emplace_back(p.real());
    im.emplace_back(p.imag());
    total += sqrt(re.back() * re.back() + im.back() * im.back());
  }
  cpp_bin_float_50 prod = 1;
  for (std::size_t j = 0; j < z.size(); ++j) {
    for (std::size_t k = j + 1; k < z.size(); ++k) {
      const cpp_bin_float_50 dr = (re[k] - re[j]) / total;
      const cpp_bin_float_50 di = (im[k] - im[j]) / total;
      prod *= sqrt(dr * dr + di * di);
    }
  }
  return static_cast<double>(prod);
}

namespace detail {

inline double normalized_angle(double t) {
  double a = std::fmod(t, 2.0 * kPi);
  if (a < 0.0) a += 2.0 * kPi;
  if (a > 2.0 * kPi - 1e-12) a = 0.0;
  return a;
}

inline bool nearly_equal(double a, double b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

/// Lexicographic order on point sequences, comparing (re, im) with a small
/// tolerance.
inline bool lex_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (!nearly_equal(a[i].real(), b[i].real())) return a[i].real() < b[i].real();
    if (!nearly_equal(a[i].imag(), b[i].imag())) return a[i].imag() < b[i].imag();
  }
  return a.size() < b.size();
}

}  // namespace detail

/// Gauge-fixed representative: rotated so a largest-modulus point is real
/// positive, then sorted by (r, theta) descending. When several points share
/// the largest modulus, the lexicographically smallest result wins.
inline VnConfig canonicalize(const VnConfig& config) {
  if (config.points.empty()) return config;
  double rmax = 0.0;
  for (const auto& p : config.points) rmax = std::max(rmax, std::abs(p));
  if (rmax == 0.0) return config;

  std::vector<Complex> best;
  for (std::size_t a = 0; a < config.points.size(); ++a) {
    if (std::abs(config.points[a]) < rmax * (1.0 - 1e-9)) continue;
    const double phase = std::arg(config.points[a]);
    struct Polar {
      double r, theta;
    };
    std::vector<Polar> pts;
    for (std::size_t j = 0; j < config.points.size(); ++j) {
      const double r = std::abs(config.points[j]);
      const double t = (j == a || r == 0.0) ? 0.0 : detail::normalized_angle(std::arg(config.points[j]) - phase);
      pts.push_back({r, t});
    }
    std::stable_sort(pts.begin(), pts.end(), [](const Polar& x, const Polar& y) {
      if (!detail::nearly_equal(x.r, y.r)) return x.r > y.r;
      return x.theta > y.theta && !detail::nearly_equal(x.theta, y.theta);
    });
    std::vector<Complex> seq;
    for (const auto& p : pts) seq.push_back(p.theta == 0.0 ? Complex(p.r, 0.0) : std::polar(p.r, p.theta));
    if (best.empty() || detail::lex_less(seq, best)) best = std::move(seq);
  }
  return VnConfig{best};
}

struct OptimizerReport {
  int n = 0;
  double best_value = 0.0;  ///< max |V_n| found
  VnConfig best_config;     ///< canonical form
  double lambda_n = 0.0;
  double ratio = 0.0;  ///< best_value / lambda_n
  int restarts = 0;
  int converged_restarts = 0;
  double criticality_residual = 0.0;
  std::uint64_t seed = 0;
  double certified_value = 0.0;  ///< |V_n(best_config)| in 50-digit arithmetic
  double tol = 0.0;
  /// Canonical configurations of every restart within 1e-6 relative of
  /// best_value, in restart order.
  std::vector<VnConfig> near_best;
};

namespace detail {

/// Points from parameters x = (s_0..s_{n-1}, theta_1..theta_{n-1}).
inline std::vector<Complex> vn_points(const Eigen::VectorXd& x, int n) {
  double total = 0.0;
  for (int j = 0; j < n; ++j) total += x[j] * x[j];
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double theta = j == 0 ? 0.0 : x[n + j - 1];
    z[static_cast<std::size_t>(j)] = std::polar(x[j] * x[j] / total, theta);
  }
  return z;
}

/// -log|V_n| and its gradient in the (s, theta) chart.
inline double vn_objective(const Eigen::VectorXd& x, Eigen::VectorXd& grad, int n) {
  double total = 0.0;
  for (int j = 0; j < n; ++j) total += x[j] * x[j];
  if (!(total > 0.0)) return std::numeric_limits<double>::infinity();
  std::vector<Complex> e(static_cast<std::size_t>(n)), z(static_cast<std::size_t>(n));
  std::vector<double> r(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    e[j] = unit_phase(j == 0 ? 0.0 : x[n + j - 1]);
    r[j] = x[j] * x[j] / total;
    z[j] = r[j] * e[j];
  }
  double value = 0.0;
  std::vector<Complex> sum_inv(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const Complex d = z[j] - z[k];
      const double ad = std::abs(d);
      if (ad == 0.0) return std::numeric_limits<double>::infinity();
      value += std::log(ad);
      const Complex inv = 1.0 / d;
      sum_inv[j] += inv;
      sum_inv[k] -= inv;
    }
  }
  // dL/dr_j = Re(e_j S_j), dL/dtheta_j = -r_j Im(e_j S_j).
  std::vector<double> g_r(static_cast<std::size_t>(n));
  double weighted = 0.0;
  for (int j = 0; j < n; ++j) {
    const Complex es = e[j] * sum_inv[j];
    g_r[j] = es.real();
    weighted += r[j] * g_r[j];
    if (j > 0) grad[n + j - 1] = r[j] * es.imag();  // minus sign of -L
  }
  for (int m = 0; m < n; ++m) grad[m] = -(2.0 * x[m] / total) * (g_r[m] - weighted);
  return -value;
}

struct RestartOutcome {
  std::vector<Complex> points;
  double value = 0.0;
  bool converged = false;
};

inline std::vector<Complex> snap_and_normalize(std::vector<Complex> z) {
  double total = 0.0;
  for (auto& p : z) {
    if (std::abs(p) <= kZeroRadius) p = Complex{};
    total += std::abs(p);
  }
  for (auto& p : z) p /= total;
  return z;
}

inline RestartOutcome run_restart(int n, std::size_t index, std::uint64_t seed, double tol) {
  const int dim = 2 * n - 1;
  Eigen::VectorXd x(dim);
  Rng rng = make_rng(seed, index);
  std::uniform_real_distribution<double> radius(0.2, 1.2);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::normal_distribution<double> noise(0.0, 0.3);
  const bool has_candidate = n >= 3;
  if (has_candidate && (index == 0 || index % 2 == 1)) {
    const VnConfig c = candidate_config(n);
    const double jitter = index == 0 ? 0.0 : 1.0;
    for (int j = 0; j < n; ++j) x[j] = std::sqrt(std::abs(c.points[j])) + jitter * noise(rng);
    for (int j = 1; j < n; ++j) x[n + j - 1] = std::arg(c.points[j]) + jitter * noise(rng);
  } else {
    for (int j = 0; j < n; ++j) x[j] = radius(rng);
    for (int j = 1; j < n; ++j) x[n + j - 1] = angle(rng);
  }
  BfgsOptions opt;
  opt.gradient_tol = tol;
  const BfgsResult res = bfgs_minimize([n](const Eigen::VectorXd& p, Eigen::VectorXd& g) { return vn_objective(p, g, n); },
                                       x, opt);
  RestartOutcome out;
  out.points = snap_and_normalize(vn_points(res.x, n));
  out.value = std::abs(vandermonde_n(out.points));
  out.converged = res.converged;
  return out;
}

}  // namespace detail

/// Multistart ascent. Restart 0 starts at candidate_config(n) (n >= 3), odd
/// restarts at a 0.3-scale perturbation of it, even restarts at random
/// points. Restart i draws from derive_seed(seed, i), and the reduction runs
/// in index order, so the report does not depend on `threads`.
inline OptimizerReport maximize_vn(int n, int restarts, std::uint64_t seed, double tol, unsigned threads = 1) {
  if (n < 2) throw std::invalid_argument("maximize_vn: n must be >= 2");
  if (restarts < 1) throw std::invalid_argument("maximize_vn: restarts must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("maximize_vn: tol must be positive");

  std::vector<detail::RestartOutcome> outcomes(static_cast<std::size_t>(restarts));
  parallel_for(outcomes.size(), threads,
               [&](std::size_t i) { outcomes[i] = detail::run_restart(n, i, seed, tol); });

  OptimizerReport rep;
  rep.n = n;
  rep.seed = seed;
  rep.tol = tol;
  rep.restarts = restarts;
  rep.lambda_n = lambda_n(n);
  std::vector<Complex> best_canon;
  for (const auto& o : outcomes) {
    if (o.converged) ++rep.converged_restarts;
    if (!(o.value > 0.0)) continue;
    const auto canon = canonicalize(VnConfig{o.points}).points;
    const bool better = o.value > rep.best_value * (1.0 + 1e-12);
    const bool tie = !better && detail::nearly_equal(o.value, rep.best_value, 1e-12);
    if (best_canon.empty() || better || (tie && detail::lex_less(canon, best_canon))) {
      rep.best_value = std::max(rep.best_value, o.value);
      best_canon = canon;
    }
  }
  for (const auto& o : outcomes)
    if (o.value > 0.0 && o.value >= rep.best_value * (1.0 - 1e-6)) rep.near_best.push_back(canonicalize(VnConfig{o.points}));
  rep.best_config = VnConfig{best_canon};
  if (!best_canon.empty()) rep.best_value = std::abs(vandermonde_n(best_canon));
  rep.ratio = rep.best_value / rep.lambda_n;
  rep.criticality_residual = kkt_residual(best_canon);
  rep.certified_value = best_canon.empty() ? 0.0 : certified_abs_vandermonde(best_canon);
  return rep;
}

}  // namespace hyperdet
