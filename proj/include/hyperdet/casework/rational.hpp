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

#include <complex>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace hyperdet::casework {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;
using Real50 = boost::multiprecision::cpp_bin_float_50;
using Complex50 = boost::multiprecision::cpp_complex_50;

/// a + b i with rational parts.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(int v) : re(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    const Rational d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }
};

inline std::string to_string(const Rational& r) { return r.str(); }

inline std::string to_string(const GaussianRational& g) {
  if (g.im == 0) return g.re.str();
  return "(" + g.re.str() + (g.im < 0 ? "" : "+") + g.im.str() + "i)";
}

inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const GaussianRational& g) { return g.re == 0 && g.im == 0; }

inline bool is_negative(const Rational& r) { return r < 0; }
inline bool is_negative(const GaussianRational& g) { return g.im == 0 && g.re < 0; }

inline std::complex<double> to_complex(const Rational& r) { return {static_cast<double>(r), 0.0}; }
inline std::complex<double> to_complex(const GaussianRational& g) {
  return {static_cast<double>(g.re), static_cast<double>(g.im)};
}

inline Real50 to_real50(const Rational& r) {
  return Real50(boost::multiprecision::numerator(r)) / Real50(boost::multiprecision::denominator(r));
}

}  // namespace hyperdet::casework
