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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperdet/casework/poly.hpp"

namespace hyperdet::casework {

template <class Coeff>
using PolyMatrix = std::vector<std::vector<Poly<Coeff>>>;

/// Sylvester matrix of p and q in `var`: deg_q rows of p coefficients
/// (highest power first), then deg_p rows of q coefficients.
template <class Coeff>
PolyMatrix<Coeff> sylvester_matrix(const Poly<Coeff>& p, const Poly<Coeff>& q, const std::string& var) {
  p.check_same_vars(q);
  if (p.is_zero() || q.is_zero()) throw std::domain_error("sylvester_matrix: zero polynomial");
  const int m = p.degree_in(var);
  const int n = q.degree_in(var);
  const std::size_t size = static_cast<std::size_t>(m + n);
  const Poly<Coeff> zero(p.vars());
  PolyMatrix<Coeff> s(size, std::vector<Poly<Coeff>>(size, zero));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + m - k] = p.coefficient_in(var, k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + n - k] = q.coefficient_in(var, k);
  return s;
}

/// Fraction-free Gaussian elimination. Every division is exact over an
/// integral domain; divide_exact throws otherwise.
template <class Coeff>
Poly<Coeff> bareiss_determinant(PolyMatrix<Coeff> a, const std::vector<std::string>& vars) {
  const std::size_t n = a.size();
  if (n == 0) return Poly<Coeff>::constant(vars, Coeff(1));
  Poly<Coeff> prev = Poly<Coeff>::constant(vars, Coeff(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return Poly<Coeff>(vars);
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

/// Res_var(p, q) as the Sylvester determinant. With this convention
/// Res(x - a, x - b) = a - b.
template <class Coeff>
Poly<Coeff> resultant(const Poly<Coeff>& p, const Poly<Coeff>& q, const std::string& var) {
  return bareiss_determinant(sylvester_matrix(p, q, var), p.vars());
}

}  // namespace hyperdet::casework
