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

#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace hyperdet {

struct BfgsOptions {
  int max_iterations = 4000;
  double gradient_tol = 1e-10;  ///< stop when ||grad||_inf falls below
  double value_tol = 1e-16;     ///< relative decrease counted as stalled
};

struct BfgsResult {
  Eigen::VectorXd x;
  double value = std::numeric_limits<double>::infinity();
  double gradient_norm = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
};

/// Dense BFGS with Armijo backtracking. `objective(x, grad)` returns f(x)
/// and writes the gradient; +inf marks points outside the domain. Purely
/// sequential, so identical inputs give bit-identical results.
template <class Objective>
BfgsResult bfgs_minimize(Objective&& objective, Eigen::VectorXd x, const BfgsOptions& opt = {}) {
  const Eigen::Index dim = x.size();
  Eigen::VectorXd g(dim);
  double f = objective(x, g);
  BfgsResult res;
  if (!std::isfinite(f)) {
    res.x = x;
    return res;
  }
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(dim, dim);
  bool h_is_identity = true;
  int stalled = 0;
  Eigen::VectorXd x_new(dim), g_new(dim);

  int it = 0;
  for (; it < opt.max_iterations; ++it) {
    if (g.lpNorm<Eigen::Infinity>() < opt.gradient_tol) {
      res.converged = true;
      break;
    }
    Eigen::VectorXd dir = -h * g;
    double slope = g.dot(dir);
    if (!(slope < 0.0)) {
      h.setIdentity();
      h_is_identity = true;
      dir = -g;
      slope = -g.squaredNorm();
    }
    double step = 1.0;
    double f_new = std::numeric_limits<double>::infinity();
    bool accepted = false;
    for (int k = 0; k < 60; ++k) {
      x_new = x + step * dir;
      f_new = objective(x_new, g_new);
      if (std::isfinite(f_new) && f_new <= f + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (h_is_identity) {
        // No descent even along -grad: we sit at the floating-point optimum.
        res.converged = g.lpNorm<Eigen::Infinity>() < std::sqrt(opt.gradient_tol);
        break;
      }
      h.setIdentity();
      h_is_identity = true;
      continue;
    }
    const Eigen::VectorXd s = x_new - x;
    const Eigen::VectorXd y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-14 * s.norm() * y.norm()) {
      if (h_is_identity) h *= sy / y.squaredNorm();
      const double rho = 1.0 / sy;
      const Eigen::VectorXd hy = h * y;
      h += (rho * rho * y.dot(hy) + rho) * (s * s.transpose()) - rho * (hy * s.transpose() + s * hy.transpose());
      h_is_identity = false;
    }
    stalled = (f - f_new <= opt.value_tol * (1.0 + std::abs(f))) ? stalled + 1 : 0;
    x = x_new;
    g = g_new;
    f = f_new;
    if (stalled >= 5) {
      res.converged = g.lpNorm<Eigen::Infinity>() < std::sqrt(opt.gradient_tol);
      break;
    }
  }
  res.x = x;
  res.value = f;
  res.gradient_norm = g.lpNorm<Eigen::Infinity>();
  res.iterations = it;
  if (res.gradient_norm < opt.gradient_tol) res.converged = true;
  return res;
}

}  // namespace hyperdet
