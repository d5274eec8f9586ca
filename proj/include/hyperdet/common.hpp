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
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hyperdet {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Radii at or below this value count as zero when classifying critical
/// points and when snapping optimizer output.
inline constexpr double kZeroRadius = 1e-9;

/// Raised when an argument lies outside the domain of a formula, e.g. two
/// coincident coordinates fed to an expression with 1/(z_j - z_k) terms.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline Complex unit_phase(double angle) { return std::polar(1.0, angle); }

}  // namespace hyperdet
