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


#include "hyperdet/casework/casework.hpp"

#include <Eigen/Eigenvalues>
#include <random>

#include "gtest/gtest.h"
#include "hyperdet/casework/resultant.hpp"

using namespace hyperdet::casework;

namespace {

const std::vector<std::string> kXY{"x", "y"};

RPoly x() { return RPoly::variable(kXY, "x"); }
RPoly y() { return RPoly::variable(kXY, "y"); }
RPoly c(int v) { return RPoly::constant(kXY, Rational(v)); }

std::vector<std::complex<double>> roots(const std::vector<int>& coeffs) {
  // coeffs highest power first, leading coefficient nonzero.
  const int n = static_cast<int>(coeffs.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) m(0, j) = -static_cast<double>(coeffs[j + 1]) / coeffs[0];
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m);
  std::vector<std::complex<double>> r(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return r;
}

RPoly univariate(const std::vector<int>& coeffs) {
  RPoly p(std::vector<std::string>{"x"});
  const int n = static_cast<int>(coeffs.size()) - 1;
  for (int k = 0; k <= n; ++k) p.add_term({n - k}, Rational(coeffs[k]));
  return p;
}

}  // namespace

TEST(poly, arithmetic) {
  const RPoly p = (x() + y()) * (x() - y());
  EXPECT_EQ(p, x().pow(2) - y().pow(2));
  EXPECT_EQ(p.degree_in("x"), 2);
  EXPECT_EQ(p.total_degree(), 2);
  EXPECT_EQ(p.coefficient_in("y", 2), c(-1));
  EXPECT_EQ(p.subst("y", x()), RPoly(kXY));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((x() + c(1)).pow(3).size(), 4U);
  EXPECT_TRUE(c(5).is_constant());
  EXPECT_EQ(c(5).constant_value(), Rational(5));
  EXPECT_EQ((x() - c(2) * y()).to_string(), "x - 2*y");
}

TEST(poly, evaluate) {
  const RPoly p = x() * x() * y() - c(3);
  const std::vector<std::complex<double>> v{{1.0, 1.0}, {2.0, 0.0}};
  EXPECT_LT(std::abs(p.evaluate(std::span<const std::complex<double>>(v)) - std::complex<double>(-3.0, 4.0)), 1e-15);
}

TEST(poly, divide_exact) {
  const RPoly p = (x() + c(2) * y()) * (x() * y() - c(7));
  EXPECT_EQ(divide_exact(p, x() + c(2) * y()), x() * y() - c(7));
  EXPECT_THROW(divide_exact(p + c(1), x() + c(2) * y()), InexactDivision);
  EXPECT_THROW(divide_exact(p, RPoly(kXY)), std::domain_error);
}

TEST(poly, mismatched_variables_throw) {
  const RPoly q = RPoly::variable({"x"}, "x");
  EXPECT_THROW(x() + q, std::invalid_argument);
  EXPECT_THROW(x() * q, std::invalid_argument);
}

TEST(poly, gaussian_coefficients) {
  const std::vector<std::string> v{"t"};
  const GPoly t = GPoly::variable(v, "t");
  const GPoly i = GPoly::constant(v, GaussianRational(0, 1));
  EXPECT_EQ((t - i) * (t + i), t * t + GPoly::constant(v, 1));
}

TEST(resultant, linear_convention) {
  const std::vector<std::string> v{"x", "a", "b"};
  const RPoly xx = RPoly::variable(v, "x"), a = RPoly::variable(v, "a"), b = RPoly::variable(v, "b");
  EXPECT_EQ(resultant(xx - a, xx - b, "x"), a - b);
}

TEST(resultant, common_root_vanishes) {
  const RPoly p = (x() - y()) * (x() + c(3));
  const RPoly q = (x() - y()) * (x() * x() + c(1));
  EXPECT_TRUE(resultant(p, q, "x").is_zero());
  EXPECT_FALSE(resultant(p, q + c(1), "x").is_zero());
  EXPECT_THROW(resultant(p, RPoly(kXY), "x"), std::domain_error);
}

TEST(resultant, matches_root_product) {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> coef(-5, 5), deg(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    auto draw = [&](int d) {
      std::vector<int> cs(static_cast<std::size_t>(d + 1));
      for (auto& v : cs) v = coef(rng);
      while (cs[0] == 0) cs[0] = coef(rng);
      return cs;
    };
    const auto pc = draw(deg(rng)), qc = draw(deg(rng));
    const int m = static_cast<int>(pc.size()) - 1, n = static_cast<int>(qc.size()) - 1;
    const RPoly r = resultant(univariate(pc), univariate(qc), "x");
    ASSERT_TRUE(r.is_constant());
    const double exact = static_cast<double>(r.constant_value());
    std::complex<double> numeric = std::pow(static_cast<double>(pc[0]), n) * std::pow(static_cast<double>(qc[0]), m);
    for (const auto& a : roots(pc))
      for (const auto& b : roots(qc)) numeric *= a - b;
    const double scale = std::max(1.0, std::abs(exact));
    EXPECT_LT(std::abs(numeric - exact) / scale, 1e-6) << "trial " << trial;
  }
}

TEST(casework, rat_contradiction) {
  const VerificationResult r = verify_rat_contradiction();
  EXPECT_TRUE(r.passed()) << r.detail;
}

TEST(casework, res_equations) {
  for (const auto& r : verify_res_equations()) {
    EXPECT_TRUE(r.passed()) << r.name << ": " << r.detail;
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(r.witness->is_zero());
  }
}

TEST(casework, mod_equations) {
  const auto results = verify_mod_equations();
  EXPECT_EQ(results.size(), 3U);
  for (const auto& r : results) {
    EXPECT_TRUE(r.passed()) << r.name << ": " << r.detail;
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(r.witness->is_zero());
  }
}

TEST(casework, final_resultant) {
  const VerificationResult r = verify_final_resultant();
  EXPECT_TRUE(r.passed()) << r.detail;
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(r.witness->is_zero());
}

TEST(casework, cleared_forms_vanish_at_critical_point) {
  EXPECT_TRUE(verify_cleared_at_critical_point().passed());
  const auto forms = cleared_w_differences();
  EXPECT_FALSE(forms.p1.is_zero());
  EXPECT_FALSE(forms.p2.is_zero());
}

TEST(casework, branch_values) {
  const auto results = verify_branch_values();
  EXPECT_EQ(results.size(), 10U);
  for (const auto& r : results) EXPECT_TRUE(r.passed()) << r.name << ": " << r.measured << " " << r.detail;
}

TEST(casework, ratio_branch_scan) {
  const RatioBranchScan s = scan_ratio_branch(120);
  EXPECT_GT(s.admissible, 0U);
  EXPECT_EQ(s.positive_gap, 0U);
  EXPECT_LT(s.max_re_gap, 0.0);
  const VerificationResult r = verify_ratio_branch();
  EXPECT_TRUE(r.evidence_only);
  EXPECT_TRUE(r.passed()) << r.detail;
}

TEST(casework, run_all) {
  const auto results = run_casework();
  EXPECT_EQ(results.size(), 19U);
  for (const auto& r : results) EXPECT_TRUE(r.passed()) << r.name;
}
