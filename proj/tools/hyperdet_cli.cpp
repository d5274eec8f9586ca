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


// Command-line entry point. JSON on stdout; --pretty prints a table instead.
// Exit codes: 0 ok, 1 verification failure, 2 usage or input error.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hyperdet/hyperdet.hpp"
#include "hyperdet/io.hpp"
#include "hyperdet/verify.hpp"

namespace {

using nlohmann::json;
using namespace hyperdet;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

struct Globals {
  unsigned threads = default_threads();
  bool pretty = false;
};

void flatten(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array()) && j.size() > 2) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << std::left << std::setw(40) << prefix << ' ' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const json& j, const Globals& g) {
  if (g.pretty) {
    flatten(j, "", std::cout);
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

// det -----------------------------------------------------------------------

struct DetEval {
  std::string in;
  bool subspace_a = false;
};

int run_det_eval(const DetEval& a, const Globals& g) {
  const QuartState psi = io::state_from_json(io::read_file(a.in));
  Complex d;
  std::string method;
  if (a.subspace_a) {
    const Projection p = project_A(psi);
    if (p.residual > 1e-12 * std::max(1.0, psi.norm()))
      throw io::InputError("--subspace-a: state is not in A (residual " + std::to_string(p.residual) + ")");
    d = det_A(p.z);
    method = "restriction";
  } else {
    d = det4(psi);
    method = "schlafli";
  }
  emit({{"det", io::to_json(d)}, {"abs", std::abs(d)}, {"method", method}}, g);
  return kOk;
}

int run_det_certify(const std::string& in, double tol, const Globals& g) {
  const AVector z = io::avector_from_json(io::read_file(in));
  CriticalityReport r;
  try {
    r = criticality_residual(z);
  } catch (const std::invalid_argument& e) {
    throw io::InputError(e.what());
  }
  json j = io::to_json(r);
  j["tol"] = tol;
  j["certified"] = r.certified(tol);
  emit(j, g);
  return kOk;
}

int run_det_generic(const std::string& in, const Globals& g) {
  const QuartState psi = io::state_from_json(io::read_file(in));
  const TangentMap t = tangent_map(psi);
  emit({{"generic", t.rank == 12}, {"rank", t.rank}, {"abs_det", std::abs(det4(psi))}}, g);
  return kOk;
}

int run_det_kempfness(int samples, int points, std::uint64_t seed, const Globals& g) {
  if (samples < 1 || points < 1) throw io::InputError("--samples and --points must be positive");
  const auto s = verify::kempf_ness_stats(1000, points, samples, seed);
  const bool pass = s.max_residual < 1e-12 && s.min_ratio >= 1.0 - 1e-9;
  emit({{"max_residual", s.max_residual},
        {"min_norm_ratio", s.min_ratio},
        {"samples", samples},
        {"points", points},
        {"seed", seed},
        {"pass", pass}},
       g);
  return pass ? kOk : kVerificationFailure;
}

int run_det_lueq(const std::string& a, const std::string& b, int restarts, std::uint64_t seed, const Globals& g) {
  const QuartState psi = io::state_from_json(io::read_file(a));
  const QuartState phi = io::state_from_json(io::read_file(b));
  if (!psi.is_normalized() || !phi.is_normalized()) throw io::InputError("lueq: both states must be normalized");
  if (restarts < 1) throw io::InputError("--restarts must be positive");
  const auto r = lu_search(psi, phi, restarts, seed, g.threads);
  emit({{"fidelity", r.fidelity}, {"witness", io::to_json(r.witness)}}, g);
  return kOk;
}

// vmax ----------------------------------------------------------------------

struct RunArgs {
  std::uint64_t seed = 0;
  int restarts = 50;
  double tol = 1e-12;
};

void check_run_args(const RunArgs& r) {
  if (r.restarts < 1) throw io::InputError("--restarts must be positive");
  if (!(r.tol > 0.0)) throw io::InputError("--tol must be positive");
}

int run_vmax(int n, const RunArgs& r, const std::string& out, const Globals& g) {
  check_run_args(r);
  if (n < 2) throw io::InputError("--n must be >= 2");
  const json j = io::to_json(maximize_vn(n, r.restarts, r.seed, r.tol, g.threads));
  if (!out.empty()) io::write_file(out, j.dump(2) + "\n");
  emit(j, g);
  return kOk;
}

int run_vmax_sweep(int n_min, int n_max, const RunArgs& r, const std::string& out, const Globals& g) {
  check_run_args(r);
  if (n_min < 2 || n_max < n_min) throw io::InputError("need 2 <= --n-min <= --n-max");
  std::ostringstream csv;
  csv << "n,lambda_n,best_value,ratio,criticality_residual,restarts,seed\n";
  csv << std::setprecision(17);
  for (int n = n_min; n <= n_max; ++n) {
    const OptimizerReport rep = maximize_vn(n, r.restarts, r.seed, r.tol, g.threads);
    csv << n << ',' << rep.lambda_n << ',' << rep.best_value << ',' << rep.ratio << ',' << rep.criticality_residual
        << ',' << rep.restarts << ',' << rep.seed << '\n';
  }
  if (out.empty()) {
    std::cout << csv.str();
  } else {
    io::write_file(out, csv.str());
  }
  return kOk;
}

// verify --------------------------------------------------------------------

int run_verify_all(const RunArgs& r, const Globals& g) {
  check_run_args(r);
  verify::SuiteOptions o;
  o.seed = r.seed;
  o.restarts = r.restarts;
  o.tol = r.tol;
  o.threads = g.threads;
  const verify::Summary s = verify::run_all(o);
  if (g.pretty) {
    for (const auto& c : s.checks) std::cout << std::left << std::setw(36) << c.name << (c.pass ? "pass" : "FAIL") << '\n';
    std::cout << std::left << std::setw(36) << "max_abs_det" << s.max_abs_det << '\n';
    std::cout << std::left << std::setw(36) << "ratio_n7" << s.ratio_n7 << '\n';
  } else {
    std::cout << s.to_json().dump(2) << '\n';
  }
  for (const auto& c : s.checks)
    if (!c.pass) std::cerr << "verify all: check failed: " << c.name << '\n';
  return s.all_pass() ? kOk : kVerificationFailure;
}

int run_verify_casework(const Globals& g) {
  const auto results = casework::run_casework();
  bool ok = true;
  if (g.pretty) {
    for (const auto& r : results) {
      ok = ok && r.passed();
      std::cout << std::left << std::setw(34) << r.name << std::setw(6) << (r.passed() ? "pass" : "FAIL")
                << (r.evidence_only ? "[evidence] " : "") << r.measured << (r.measured.empty() ? "" : "  ") << r.detail
                << '\n';
    }
  } else {
    json list = json::array();
    for (const auto& r : results) {
      ok = ok && r.passed();
      list.push_back(io::to_json(r));
    }
    std::cout << json{{"all_pass", ok}, {"results", list}}.dump(2) << '\n';
  }
  return ok ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-qubit hyperdeterminant toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "worker threads (default: hardware concurrency)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--pretty", g.pretty, "print a human-readable table instead of JSON");

  auto add_run_args = [](CLI::App* cmd, RunArgs& r) {
    cmd->add_option("--seed", r.seed, "64-bit seed")->capture_default_str();
    cmd->add_option("--restarts", r.restarts, "optimizer restarts")->capture_default_str();
    cmd->add_option("--tol", r.tol, "optimizer tolerance")->capture_default_str();
  };

  auto* det = app.add_subcommand("det", "hyperdeterminant evaluation and certification");
  det->require_subcommand(1);

  DetEval eval;
  auto* det_eval = det->add_subcommand("eval", "evaluate Det of a state");
  det_eval->add_option("--in", eval.in, "state JSON")->required();
  det_eval->add_flag("--subspace-a", eval.subspace_a, "use the product formula on A (state must lie in A)");

  std::string certify_in;
  double certify_tol = 1e-12;
  auto* det_certify = det->add_subcommand("certify", "first-order criticality report for an A-point");
  det_certify->add_option("--in", certify_in, "A-point JSON")->required();
  det_certify->add_option("--tol", certify_tol, "certification tolerance")->capture_default_str();

  std::string generic_in;
  auto* det_generic = det->add_subcommand("generic", "orbit-dimension genericity test");
  det_generic->add_option("--in", generic_in, "state JSON")->required();

  int kn_samples = 500, kn_points = 20;
  std::uint64_t kn_seed = 0;
  auto* det_kn = det->add_subcommand("kempfness", "Kempf-Ness orthogonality and norm-minimality sampling on A");
  det_kn->add_option("--samples", kn_samples, "probes per point")->capture_default_str();
  det_kn->add_option("--points", kn_points, "random points of A")->capture_default_str();
  det_kn->add_option("--seed", kn_seed, "64-bit seed")->capture_default_str();

  std::string lueq_a, lueq_b;
  int lueq_restarts = 50;
  std::uint64_t lueq_seed = 0;
  auto* det_lueq = det->add_subcommand("lueq", "search for a local unitary mapping a to b");
  det_lueq->add_option("--a", lueq_a, "state JSON")->required();
  det_lueq->add_option("--b", lueq_b, "state JSON")->required();
  det_lueq->add_option("--restarts", lueq_restarts, "restarts")->capture_default_str();
  det_lueq->add_option("--seed", lueq_seed, "64-bit seed")->capture_default_str();

  int vmax_n = 0;
  std::string vmax_out;
  RunArgs vmax_args;
  auto* vmax = app.add_subcommand("vmax", "maximize |V_n| under sum |z_j| = 1");
  vmax->add_option("--n", vmax_n, "number of points");
  vmax->add_option("--out", vmax_out, "also write the JSON report here");
  add_run_args(vmax, vmax_args);

  int sweep_min = 2, sweep_max = 8;
  std::string sweep_out;
  RunArgs sweep_args;
  auto* sweep = vmax->add_subcommand("sweep", "run vmax for a range of n and write CSV");
  sweep->add_option("--n-min", sweep_min, "smallest n")->capture_default_str();
  sweep->add_option("--n-max", sweep_max, "largest n")->capture_default_str();
  sweep->add_option("--out", sweep_out, "CSV path (default: stdout)");
  add_run_args(sweep, sweep_args);

  RunArgs verify_args;
  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  auto* verify_all = verify->add_subcommand("all", "every check, JSON summary");
  add_run_args(verify_all, verify_args);
  auto* verify_casework = verify->add_subcommand("casework", "exact case analysis checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*det_eval) return run_det_eval(eval, g);
    if (*det_certify) return run_det_certify(certify_in, certify_tol, g);
    if (*det_generic) return run_det_generic(generic_in, g);
    if (*det_kn) return run_det_kempfness(kn_samples, kn_points, kn_seed, g);
    if (*det_lueq) return run_det_lueq(lueq_a, lueq_b, lueq_restarts, lueq_seed, g);
    if (*sweep) return run_vmax_sweep(sweep_min, sweep_max, sweep_args, sweep_out, g);
    if (*vmax) {
      if (vmax_n == 0) throw io::InputError("vmax: --n is required");
      return run_vmax(vmax_n, vmax_args, vmax_out, g);
    }
    if (*verify_all) return run_verify_all(verify_args, g);
    if (*verify_casework) return run_verify_casework(g);
  } catch (const io::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsageError;
}
