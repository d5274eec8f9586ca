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

// Sparse multivariate polynomials with exact coefficients over a named,
// ordered variable list. Terms are kept in graded lexicographic order, so
// begin() is the leading term.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperdet/casework/rational.hpp"

namespace hyperdet::casework {

using Monomial = std::vector<int>;

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
  }
};

class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class Coeff>
class Poly {
 public:
  using Terms = std::map<Monomial, Coeff, GrlexGreater>;

  explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Poly constant(std::vector<std::string> vars, const Coeff& c) {
    Poly p(std::move(vars));
    p.add_term(Monomial(p.vars_.size(), 0), c);
    return p;
  }

  static Poly variable(std::vector<std::string> vars, const std::string& name) {
    Poly p(std::move(vars));
    Monomial m(p.vars_.size(), 0);
    m[p.index_of(name)] = 1;
    p.add_term(m, Coeff(1));
    return p;
  }

  /// One Poly per variable, in order.
  static std::vector<Poly> variables(const std::vector<std::string>& vars) {
    std::vector<Poly> out;
    for (const auto& v : vars) out.push_back(variable(vars, v));
    return out;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::size_t index_of(const std::string& name) const {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw std::invalid_argument("Poly: unknown variable " + name);
    return static_cast<std::size_t>(it - vars_.begin());
  }

  void add_term(const Monomial& m, const Coeff& c) {
    if (m.size() != vars_.size()) throw std::invalid_argument("Poly: monomial arity mismatch");
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  int degree_in(const std::string& name) const {
    const std::size_t i = index_of(name);
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
    return d;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    return d;
  }

  /// Coefficient of name^k, as a polynomial over the same variables.
  Poly coefficient_in(const std::string& name, int k) const {
    const std::size_t i = index_of(name);
    Poly out(vars_);
    for (const auto& [m, c] : terms_) {
      if (m[i] != k) continue;
      Monomial r = m;
      r[i] = 0;
      out.add_term(r, c);
    }
    return out;
  }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree() == 0); }

  Coeff constant_value() const {
    if (!is_constant()) throw std::domain_error("Poly::constant_value: not a constant");
    return terms_.empty() ? Coeff(0) : terms_.begin()->second;
  }

  /// Replaces variable `name` by the polynomial `value`.
  Poly subst(const std::string& name, const Poly& value) const {
    check_same_vars(value);
    const std::size_t i = index_of(name);
    Poly out(vars_);
    std::vector<Poly> powers{constant(vars_, Coeff(1))};
    for (const auto& [m, c] : terms_) {
      while (static_cast<int>(powers.size()) <= m[i]) powers.push_back(powers.back() * value);
      Monomial rest = m;
      rest[i] = 0;
      Poly term(vars_);
      term.add_term(rest, c);
      out += term * powers[static_cast<std::size_t>(m[i])];
    }
    return out;
  }

  Poly pow(int k) const {
    Poly out = constant(vars_, Coeff(1));
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  /// Evaluates with values of any field T constructible from the
  /// coefficients via `convert`.
  template <class T, class Convert>
  T evaluate(std::span<const T> values, Convert convert) const {
    if (values.size() != vars_.size()) throw std::invalid_argument("Poly::evaluate: wrong number of values");
    T sum = T(0);
    for (const auto& [m, c] : terms_) {
      T t = convert(c);
      for (std::size_t i = 0; i < m.size(); ++i)
        for (int e = 0; e < m[i]; ++e) t *= values[i];
      sum += t;
    }
    return sum;
  }

  std::complex<double> evaluate(std::span<const std::complex<double>> values) const {
    return evaluate<std::complex<double>>(values, [](const Coeff& c) { return to_complex(c); });
  }

  Poly& operator+=(const Poly& o) {
    check_same_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_same_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, Coeff(0) - c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly(a.vars_) - a; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_vars(b);
    Poly out(a.vars_);
    Monomial m(a.vars_.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        out.add_term(m, ca * cb);
      }
    }
    return out;
  }
  friend Poly operator*(const Coeff& s, const Poly& a) {
    Poly out(a.vars_);
    for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
    return out;
  }
  friend Poly operator*(const Poly& a, const Coeff& s) { return s * a; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, coeff] : terms_) {
      const bool neg = is_negative(coeff);
      const Coeff c = neg ? Coeff(0) - coeff : coeff;
      if (!first) os << (neg ? " - " : " + ");
      else if (neg) os << "-";
      first = false;
      const bool unit_monomial = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
      if (unit_monomial || !(c == Coeff(1))) os << hyperdet::casework::to_string(c);
      bool star = !unit_monomial && !(c == Coeff(1));
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (star) os << "*";
        os << vars_[i];
        if (m[i] > 1) os << "^" << m[i];
        star = true;
      }
    }
    return os.str();
  }

  void check_same_vars(const Poly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("Poly: mismatched variable lists");
  }

 private:
  static bool is_zero_coeff(const Coeff& c) { return hyperdet::casework::is_zero(c); }

  std::vector<std::string> vars_;
  Terms terms_;
};

/// Quotient of num by den; throws InexactDivision when den does not divide
/// num. Uses the graded lex leading terms: if den | num then the leading
/// term of num is divisible by that of den at every step.
template <class Coeff>
Poly<Coeff> divide_exact(const Poly<Coeff>& num, const Poly<Coeff>& den) {
  num.check_same_vars(den);
  if (den.is_zero()) throw std::domain_error("divide_exact: division by the zero polynomial");
  Poly<Coeff> rem = num;
  Poly<Coeff> quot(num.vars());
  const auto& [dm, dc] = *den.terms().begin();
  while (!rem.is_zero()) {
    const auto [rm, rc] = *rem.terms().begin();
    Monomial q(rm.size());
    for (std::size_t i = 0; i < rm.size(); ++i) {
      q[i] = rm[i] - dm[i];
      if (q[i] < 0) throw InexactDivision("divide_exact: nonzero remainder");
    }
    Poly<Coeff> term(num.vars());
    term.add_term(q, rc / dc);
    quot += term;
    rem -= term * den;
  }
  return quot;
}

using RPoly = Poly<Rational>;
using GPoly = Poly<GaussianRational>;

}  // namespace hyperdet::casework
