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


// Walks through the main results: Det(L), the maximum of |Det| on the unit
// sphere of A, the shape of the maximizer, and the reduction back to |L>.

#include <cmath>
#include <cstdio>

#include "hyperdet/hyperdet.hpp"

int main() {
  using namespace hyperdet;

  const AVector l = state_L();
  const Complex dl = det_A(l);
  const Complex d4 = det4(embed_A(l));
  std::printf("Det(L) on A        = %.12e %+.3e i\n", dl.real(), dl.imag());
  std::printf("Det(L) via pencil  = %.12e %+.3e i\n", d4.real(), d4.imag());
  std::printf("-3^-9              = %.12e\n", -std::pow(3.0, -9.0));

  // |Det| on the unit sphere of A is |V_4|^2 of the squared coordinates.
  const OptimizerReport rep = maximize_vn(4, 50, 0, 1e-12);
  std::printf("\nmax |Det| found    = %.12e (%d/%d restarts converged)\n", rep.best_value * rep.best_value,
              rep.converged_restarts, rep.restarts);
  std::printf("squared coordinates of the best point:\n");
  for (const auto& p : rep.best_config.points)
    std::printf("  r = %.9f  theta/pi = %+.9f\n", std::abs(p), std::arg(p) / kPi);

  const CanonicalForm c = canonicalize_maximizer(lift_squares(rep.best_config.points));
  std::printf("\nreduced to %s at distance %.2e via", c.is_Lprime ? "|L'>" : "|L>", c.distance);
  for (const auto& m : c.transcript) std::printf(" %s", m.describe().c_str());
  std::printf("\n");

  const OptimizerReport seven = maximize_vn(7, 40, 0, 1e-12);
  std::printf("\nn = 7: best |V_7| / lambda_7 = %.6f\n", seven.ratio);
  return 0;
}
