// Copyright 2026 The wtomo Authors
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

#include "wtomo/calibration.hpp"

#include <cmath>
#include <stdexcept>

namespace wtomo {

CalibrationMatrix CalibrationMatrix::from_errors(double p01, double p10) {
  if (!(p01 >= 0.0 && p01 <= 1.0 && p10 >= 0.0 && p10 <= 1.0)) {
    throw std::invalid_argument("readout error probabilities must lie in [0, 1]");
  }
  CalibrationMatrix m;
  m.f = {{{1.0 - p10, p01}, {p10, 1.0 - p01}}};
  return m;
}

CalibrationMatrix CalibrationMatrix::inverse() const {
  const double d = det();
  if (std::abs(d) <= 1e-6) throw std::domain_error("calibration matrix is singular (det " + std::to_string(d) + ")");
  CalibrationMatrix inv;
  inv.f = {{{f[1][1] / d, -f[0][1] / d}, {-f[1][0] / d, f[0][0] / d}}};
  return inv;
}

bool CalibrationMatrix::is_column_stochastic(double tol) const {
  for (int c = 0; c < 2; ++c) {
    for (int r = 0; r < 2; ++r) {
      if (f[r][c] < -tol || f[r][c] > 1.0 + tol) return false;
    }
    if (std::abs(f[0][c] + f[1][c] - 1.0) > tol) return false;
  }
  return true;
}

std::vector<double> apply_per_qubit(std::span<const double> p, std::span<const CalibrationMatrix> mats) {
  const std::size_t n = mats.size();
  if (p.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("apply_per_qubit: need one matrix per qubit (" + std::to_string(p.size()) +
                                " outcomes, " + std::to_string(n) + " matrices)");
  }
  std::vector<double> out(p.begin(), p.end());
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    const auto& m = mats[q].f;
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
      if (idx & bit) continue;
      const double x0 = out[idx];
      const double x1 = out[idx | bit];
      out[idx] = m[0][0] * x0 + m[0][1] * x1;
      out[idx | bit] = m[1][0] * x0 + m[1][1] * x1;
    }
  }
  return out;
}

}  // namespace wtomo
