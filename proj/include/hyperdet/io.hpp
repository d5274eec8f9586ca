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

// JSON encodings:
//   state:   {"amplitudes": [[re, im] x 16]}
//   A-point: {"z": [[re, im] x 4]}

#include <array>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "hyperdet/casework/casework.hpp"
#include "hyperdet/critpoint.hpp"
#include "hyperdet/luequiv.hpp"
#include "hyperdet/orbit.hpp"
#include "hyperdet/qstate.hpp"
#include "hyperdet/vmax.hpp"

namespace hyperdet::io {

using nlohmann::json;

/// Malformed or unreadable input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json to_json(Complex c) { return json::array({c.real(), c.imag()}); }

inline Complex complex_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError(where + ": expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

template <std::size_t N>
std::array<Complex, N> complex_array(const json& doc, const std::string& key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError("missing key \"" + key + "\"");
  const json& a = doc.at(key);
  if (!a.is_array()) throw InputError("\"" + key + "\" must be an array");
  if (a.size() != N)
    throw InputError("\"" + key + "\" must have " + std::to_string(N) + " entries, got " + std::to_string(a.size()));
  std::array<Complex, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = complex_from_json(a[i], key + "[" + std::to_string(i) + "]");
  return out;
}

inline QuartState state_from_json(const json& doc) {
  try {
    return QuartState(complex_array<16>(doc, "amplitudes"));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

inline AVector avector_from_json(const json& doc) { return AVector{complex_array<4>(doc, "z")}; }

inline json to_json(const QuartState& psi) {
  json a = json::array();
  for (const auto& c : psi.amplitudes()) a.push_back(to_json(c));
  return {{"amplitudes", a}};
}

inline json to_json(const AVector& v) {
  json a = json::array();
  for (const auto& c : v.z) a.push_back(to_json(c));
  return {{"z", a}};
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

inline json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

inline json to_json(const CriticalityReport& r) {
  return {{"classification", to_string(r.classification)},
          {"max_imag", finite_or_null(r.max_imag)},
          {"max_pairwise_gap", finite_or_null(r.max_pairwise_gap)},
          {"phase_sum_residual", finite_or_null(r.phase_sum_residual)},
          {"boundary_residual", finite_or_null(r.boundary_residual)},
          {"worst", finite_or_null(r.worst())}};
}

inline json to_json(const VnConfig& c) {
  json a = json::array();
  for (const auto& p : c.points) a.push_back(to_json(p));
  return a;
}

inline json to_json(const OptimizerReport& r) {
  return {{"n", r.n},
          {"best_value", r.best_value},
          {"certified_value", r.certified_value},
          {"lambda_n", r.lambda_n},
          {"ratio", r.ratio},
          {"restarts", r.restarts},
          {"converged_restarts", r.converged_restarts},
          {"criticality_residual", finite_or_null(r.criticality_residual)},
          {"seed", r.seed},
          {"tol", r.tol},
          {"best_config", to_json(r.best_config)}};
}

inline json to_json(const Mat2& m) {
  return json::array({json::array({to_json(m(0, 0)), to_json(m(0, 1))}), json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

inline json to_json(const LocalOperator& g) {
  json a = json::array();
  for (const auto& f : g.factors()) a.push_back(to_json(f));
  return a;
}

inline json to_json(const casework::VerificationResult& r) {
  json j{{"name", r.name}, {"status", casework::to_string(r.status)}};
  if (r.witness) j["witness"] = r.witness->to_string();
  if (!r.measured.empty()) j["measured"] = r.measured;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.evidence_only) j["evidence_only"] = true;
  return j;
}

}  // namespace hyperdet::io
