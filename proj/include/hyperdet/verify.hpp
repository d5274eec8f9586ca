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

// The one-shot verification suite behind `verify all`.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <exception>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperdet/casework/casework.hpp"
#include "hyperdet/critpoint.hpp"
#include "hyperdet/det.hpp"
#include "hyperdet/io.hpp"
#include "hyperdet/luequiv.hpp"
#include "hyperdet/orbit.hpp"
#include "hyperdet/qstate.hpp"
#include "hyperdet/random.hpp"
#include "hyperdet/vmax.hpp"

namespace hyperdet::verify {

using nlohmann::json;

struct SuiteOptions {
  std::uint64_t seed = 0;
  int restarts = 50;  ///< restarts for the |det_A| maximization
  double tol = 1e-12;
  unsigned threads = 1;
  int n7_restarts = 200;
};

struct Check {
  std::string name;
  bool pass = false;
  json measured = json::object();
};

inline double relative_gap(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline AVector random_avector(Rng& rng) {
  AVector z;
  for (auto& c : z.z) c = random_normal_complex(rng);
  return z;
}

inline QuartState random_state(Rng& rng) {
  QuartState::Amplitudes a;
  for (auto& c : a) c = random_normal_complex(rng);
  return QuartState(a).normalized();
}

/// Random point of A with nonzero det_A, on the unit sphere.
inline AVector random_generic_avector(Rng& rng) {
  for (;;) {
    const AVector z = random_avector(rng);
    if (std::abs(det_A(z)) > 1e-12) return z.scaled(1.0 / z.norm());
  }
}

struct SchlafliStats {
  double kappa_spread = 0.0;
  double restriction_gap = 0.0;   ///< det4 o embed_A vs det_A
  double sl_gap = 0.0;            ///< det4(g psi) vs det4(psi)
  double permutation_gap = 0.0;   ///< over the 24 qubit permutations
  double homogeneity_gap = 0.0;   ///< det4(c psi) vs c^24 det4(psi)
};

/// Relative deviations over `points` random A-points and `states` random states.
inline SchlafliStats schlafli_stats(int points, int states, std::uint64_t seed) {
  SchlafliStats s;
  s.kappa_spread = calibration().max_relative_spread;
  for (int i = 0; i < points; ++i) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(i));
    const AVector z = random_avector(rng);
    s.restriction_gap = std::max(s.restriction_gap, relative_gap(det4(embed_A(z)), det_A(z)));
  }
  std::array<int, 4> perm{0, 1, 2, 3};
  std::vector<std::array<int, 4>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  for (int i = 0; i < states; ++i) {
    Rng rng = make_rng(seed ^ 0x9e3779b97f4a7c15ULL, static_cast<std::uint64_t>(i));
    const QuartState psi = random_state(rng);
    const Complex d = det4(psi);
    s.sl_gap = std::max(s.sl_gap, relative_gap(det4(apply_local(random_sl(rng, 0.5), psi)), d));
    for (const auto& p : perms) s.permutation_gap = std::max(s.permutation_gap, relative_gap(det4(psi.permuted(p)), d));
    const Complex c = 0.5 * random_normal_complex(rng) + Complex(1.0);
    s.homogeneity_gap = std::max(s.homogeneity_gap, relative_gap(det4(c * psi), std::pow(c, 24) * d));
  }
  return s;
}

inline Check check_hyperdet(const SuiteOptions& o) {
  const SchlafliStats s = schlafli_stats(1000, 100, o.seed);
  Check c{"hyperdet_calibration_invariance", false, {}};
  const Complex dl = det_A(state_L());
  c.measured = {{"kappa", io::to_json(calibrate())},
                {"kappa_spread", s.kappa_spread},
                {"det_L", io::to_json(dl)},
                {"restriction_gap", s.restriction_gap},
                {"sl_gap", s.sl_gap},
                {"permutation_gap", s.permutation_gap},
                {"homogeneity_gap", s.homogeneity_gap}};
  c.pass = std::abs(dl + std::pow(3.0, -9.0)) < 1e-14 && s.restriction_gap < 1e-9 && s.sl_gap < 1e-8 &&
           s.permutation_gap < 1e-8 && s.homogeneity_gap < 1e-8;
  return c;
}

struct KempfNessStats {
  double max_residual = 0.0;  ///< max |<z, X_k z>| / ||z||^2
  double min_ratio = 0.0;     ///< min ||g z|| / ||z|| over probes
};

inline KempfNessStats kempf_ness_stats(int points, int probe_points, int samples, std::uint64_t seed) {
  KempfNessStats s;
  for (int i = 0; i < points; ++i) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(i));
    const AVector z = random_avector(rng);
    s.max_residual = std::max(s.max_residual, kempf_ness_residual(z) / (z.norm() * z.norm()));
  }
  s.min_ratio = std::numeric_limits<double>::infinity();
  for (int i = 0; i < probe_points; ++i) {
    Rng rng = make_rng(seed ^ 0x5bd1e995ULL, static_cast<std::uint64_t>(i));
    const AVector z = random_generic_avector(rng);
    s.min_ratio = std::min(s.min_ratio, norm_min_probe(z, samples, derive_seed(seed, 1000 + i)).min_ratio);
  }
  return s;
}

inline Check check_kempf_ness(const SuiteOptions& o) {
  const KempfNessStats s = kempf_ness_stats(1000, 20, 500, o.seed);
  Check c{"kempf_ness", false, {}};
  c.measured = {{"max_residual", s.max_residual}, {"min_norm_ratio", s.min_ratio}};
  c.pass = s.max_residual < 1e-12 && s.min_ratio >= 1.0 - 1e-9;
  return c;
}

/// Equilateral shape of a canonical n = 4 maximizer: one point below 1e-6
/// and three of modulus 1/3 spaced by 2 pi / 3.
inline double triangle_deviation(const VnConfig& c) {
  if (c.points.size() != 4) return std::numeric_limits<double>::infinity();
  std::vector<Complex> nonzero;
  int zeros = 0;
  for (const auto& p : c.points) (std::abs(p) < 1e-6 ? ++zeros : (nonzero.push_back(p), 0));
  if (zeros != 1) return std::numeric_limits<double>::infinity();
  double dev = 0.0;
  const Complex rot = unit_phase(2.0 * kPi / 3.0);
  for (const auto& p : nonzero) {
    dev = std::max(dev, std::abs(std::abs(p) - 1.0 / 3.0));
    // Each vertex rotated by +-2 pi/3 lands on another vertex.
    double best_plus = std::numeric_limits<double>::infinity();
    double best_minus = best_plus;
    for (const auto& q : nonzero) {
      best_plus = std::min(best_plus, std::abs(p * rot - q));
      best_minus = std::min(best_minus, std::abs(p * std::conj(rot) - q));
    }
    dev = std::max({dev, best_plus, best_minus});
  }
  return dev;
}

inline Check check_max_abs_det(const SuiteOptions& o, OptimizerReport* out = nullptr) {
  const OptimizerReport rep = maximize_vn(4, o.restarts, o.seed, o.tol, o.threads);
  if (out) *out = rep;
  const double det_max = rep.best_value * rep.best_value;
  const double target = std::pow(3.0, -9.0);
  Check c{"maximize_abs_det", false, {}};
  const double shape = triangle_deviation(rep.best_config);
  c.measured = {{"max_abs_det", det_max},
                {"relative_error", std::abs(det_max - target) / target},
                {"shape_deviation", io::finite_or_null(shape)},
                {"restarts", rep.restarts},
                {"converged_restarts", rep.converged_restarts}};
  c.pass = std::abs(det_max - target) / target < 1e-6 && shape < 1e-6;
  return c;
}

inline Check check_criticality(const OptimizerReport& rep) {
  Check c{"criticality_certificate", false, {}};
  AVector w;
  for (std::size_t j = 0; j < 4 && j < rep.best_config.points.size(); ++j) w[j] = rep.best_config.points[j];
  try {
    const CriticalityReport r = criticality_residual(w);
    c.measured = io::to_json(r);
    c.pass = r.certified(1e-8) && r.classification == Classification::one_zero;
  } catch (const std::exception& e) {
    c.measured = {{"error", e.what()}};
  }
  return c;
}

/// Canonicalizes 100 random family members and every near-best optimizer
/// configuration lifted to A.
inline Check check_canonicalization(const SuiteOptions& o, const OptimizerReport& rep) {
  Check c{"canonicalize_maximizer_closure", false, {}};
  double family_worst = 0.0;
  double optimizer_worst = 0.0;
  int failures = 0, to_l = 0, to_lp = 0;
  for (int i = 0; i < 100; ++i) {
    Rng rng = make_rng(o.seed ^ 0xc2b2ae35ULL, static_cast<std::uint64_t>(i));
    MaximizerParams p;
    p.zero_index = static_cast<int>(rng() % 4);
    p.phase = std::uniform_real_distribution<double>(0.0, 2.0 * kPi)(rng);
    p.orientation = (rng() % 2) ? 1 : -1;
    p.root_signs = static_cast<unsigned>(rng() % 8);
    try {
      const auto f = canonicalize_maximizer(maximizer(p));
      family_worst = std::max(family_worst, f.distance);
    } catch (const std::exception&) {
      ++failures;
    }
  }
  for (const auto& cfg : rep.near_best) {
    try {
      const auto f = canonicalize_maximizer(lift_squares(cfg.points));
      optimizer_worst = std::max(optimizer_worst, f.distance);
      (f.is_Lprime ? to_lp : to_l)++;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  c.measured = {{"family_max_distance", family_worst},
                {"optimizer_maximizers", rep.near_best.size()},
                {"optimizer_to_L", to_l},
                {"optimizer_to_Lprime", to_lp},
                {"optimizer_max_distance", optimizer_worst},
                {"failures", failures}};
  c.pass = failures == 0 && family_worst < 1e-8 && !rep.near_best.empty();
  return c;
}

/// max |U_i u_j - u_{pi(j)}| over i, j, pi the transposition (i, i+1).
inline double transposition_error() {
  double err = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) {
      const int k = j == i ? i + 1 : (j == i + 1 ? i : j);
      const QuartState moved = apply_local(permutation_unitary(i), basis_u(j));
      const QuartState diff = moved - basis_u(k);
      err = std::max(err, diff.norm());
    }
  }
  return err;
}

inline Check check_lu(const SuiteOptions& o) {
  Check c{"lu_equivalence", false, {}};
  const double terr = transposition_error();
  const auto r = lu_search(embed_A(state_L()), embed_A(state_Lprime()), 64, 1, o.threads);
  c.measured = {{"transposition_error", terr}, {"fidelity", r.fidelity}, {"witness", io::to_json(r.witness)}};
  c.pass = terr < 1e-14 && r.fidelity > 1.0 - 1e-6;
  return c;
}

inline Check check_casework() {
  Check c{"casework", false, {}};
  json results = json::array();
  bool ok = true;
  for (const auto& r : casework::run_casework()) {
    ok = ok && r.passed();
    results.push_back(io::to_json(r));
  }
  c.measured = {{"results", results}};
  c.pass = ok;
  return c;
}

inline Check check_vmax7(const SuiteOptions& o, double* ratio = nullptr) {
  const OptimizerReport rep = maximize_vn(7, o.n7_restarts, o.seed, o.tol, o.threads);
  if (ratio) *ratio = rep.ratio;
  Check c{"vmax_n7_improvement", false, {}};
  c.measured = {{"ratio", rep.ratio},
                {"best_value", rep.best_value},
                {"certified_value", rep.certified_value},
                {"lambda_n", rep.lambda_n},
                {"criticality_residual", io::finite_or_null(rep.criticality_residual)}};
  c.pass = rep.ratio > 1.0 + 1e-6;
  return c;
}

struct Summary {
  std::vector<Check> checks;
  double max_abs_det = 0.0;
  double ratio_n7 = 0.0;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }

  json to_json() const {
    json list = json::array();
    for (const auto& c : checks) list.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"measured", c.measured}});
    return {{"all_pass", all_pass()}, {"max_abs_det", max_abs_det}, {"ratio_n7", ratio_n7}, {"checks", list}};
  }
};

/// Runs every check in order. A check that throws is recorded as failed.
inline Summary run_all(const SuiteOptions& o) {
  Summary s;
  auto guarded = [&](const char* name, auto&& fn) {
    try {
      s.checks.push_back(fn());
    } catch (const std::exception& e) {
      s.checks.push_back({name, false, {{"error", e.what()}}});
    }
  };
  OptimizerReport rep;
  guarded("hyperdet_calibration_invariance", [&] { return check_hyperdet(o); });
  guarded("kempf_ness", [&] { return check_kempf_ness(o); });
  guarded("maximize_abs_det", [&] { return check_max_abs_det(o, &rep); });
  s.max_abs_det = rep.best_value * rep.best_value;
  guarded("criticality_certificate", [&] { return check_criticality(rep); });
  guarded("canonicalize_maximizer_closure", [&] { return check_canonicalization(o, rep); });
  guarded("lu_equivalence", [&] { return check_lu(o); });
  guarded("casework", [] { return check_casework(); });
  guarded("vmax_n7_improvement", [&] { return check_vmax7(o, &s.ratio_n7); });
  return s;
}

}  // namespace hyperdet::verify
